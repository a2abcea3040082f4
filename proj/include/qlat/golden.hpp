#pragma once

// Parser for the embedded reference-series blocks.  Each block is checked
// against its fnv1a-64 checksum before use.

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qlat/golden_data.hpp"

namespace qlat::golden {

inline std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

template <typename Coeff>
struct Series {
  long long order = 0;
  std::map<long long, Coeff> terms;

  Coeff at(long long m) const {
    auto it = terms.find(m);
    return it == terms.end() ? Coeff{} : it->second;
  }
};

template <typename Coeff>
std::map<std::string, Series<Coeff>> parse(std::string_view text, std::uint64_t checksum) {
  if (!text.empty() && text.front() == '\n') text.remove_prefix(1);
  if (fnv1a(text) != checksum)
    throw std::logic_error("golden data: checksum mismatch, fixture was modified");
  std::map<std::string, Series<Coeff>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  Series<Coeff>* cur = nullptr;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (line.rfind("series ", 0) == 0) {
      std::string kw, name;
      long long order;
      ls >> kw >> name >> order;
      cur = &out[name];
      cur->order = order;
    } else {
      if (!cur) throw std::logic_error("golden data: term before series header");
      long long m;
      Coeff c;
      ls >> m >> c;
      if (ls.fail()) throw std::logic_error("golden data: bad term line: " + line);
      cur->terms[m] = c;
    }
  }
  return out;
}

inline const std::map<std::string, Series<long long>>& d5_series() {
  static const auto data = parse<long long>(d5_series_text, d5_series_checksum);
  return data;
}

inline const std::map<std::string, Series<long long>>& d23_series() {
  static const auto data = parse<long long>(d23_series_text, d23_series_checksum);
  return data;
}

inline const std::map<std::string, Series<double>>& d23_psi() {
  static const auto data = parse<double>(d23_psi_text, d23_psi_checksum);
  return data;
}

}  // namespace qlat::golden
