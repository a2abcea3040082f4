#pragma once

// Rendering of series, verdicts, scan rows, and campaign reports in the three
// output formats.  Text q-expansions read `c0 + c1*q + c2*q^2 + ...` with
// zero terms omitted; CSV rows are `m, r_num, r_den, s_num, s_den`; JSON uses
// exact {num, den} rationals and {r, s, D} quadratic values.  Floats are
// always printed with 6 significant digits.

#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qlat/design.hpp"
#include "qlat/verify.hpp"

namespace qlat::io {

inline constexpr const char* kSeriesSchema = "qlat.series/1";
inline constexpr const char* kShellSchema = "qlat.shell/1";
inline constexpr const char* kVerdictSchema = "qlat.design-verdict/1";
inline constexpr const char* kScanSchema = "qlat.scan/1";
inline constexpr const char* kReportSchema = "qlat.campaign-report/1";
inline constexpr const char* kH3Schema = "qlat.h3-report/1";

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

namespace detail {

inline int sign_of(const Int& c) { return sgn(c); }
inline int sign_of(const Rat& c) { return sgn(c); }
inline int sign_of(double c) { return c < 0 ? -1 : (c > 0 ? 1 : 0); }
inline int sign_of(const QuadValue& c) {
  return c.rational_part() != 0 ? sgn(c.rational_part()) : sgn(c.surd_part());
}

inline std::string magnitude_str(const Int& c) { Int a = abs(c); return a.get_str(); }
inline std::string magnitude_str(const Rat& c) { Rat a = abs(c); return a.get_str(); }
inline std::string magnitude_str(double c) { return format_double(c < 0 ? -c : c); }
inline std::string magnitude_str(const QuadValue& c) {
  QuadValue a = sign_of(c) < 0 ? -c : c;
  std::string s = a.str();
  // compound values are parenthesized so the *q^m stays unambiguous
  if (s.find(' ') != std::string::npos) return "(" + s + ")";
  return s;
}

inline bool is_one(const Int& c) { return c == 1; }
inline bool is_one(const Rat& c) { return c == 1; }
inline bool is_one(double c) { return c == 1.0; }
inline bool is_one(const QuadValue& c) { return c == QuadValue(Rat(1)); }

}  // namespace detail

template <typename C>
std::string expansion_text(const QSeries<C>& s) {
  if (s.terms().empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : s.terms()) {
    int sign = detail::sign_of(c);
    C a = sign < 0 ? C(-c) : c;
    if (first) {
      if (sign < 0) os << "-";
      first = false;
    } else {
      os << (sign < 0 ? " - " : " + ");
    }
    if (m == 0) {
      os << detail::magnitude_str(a);
    } else {
      if (!detail::is_one(a)) os << detail::magnitude_str(a) << "*";
      os << "q";
      if (m != 1) os << "^" << m;
    }
  }
  return os.str();
}

namespace detail {

struct CsvParts {
  std::string r_num = "0", r_den = "1", s_num = "0", s_den = "1";
};

inline CsvParts csv_parts(const Int& c) { return {c.get_str(), "1", "0", "1"}; }
inline CsvParts csv_parts(const Rat& c) {
  return {c.get_num().get_str(), c.get_den().get_str(), "0", "1"};
}
inline CsvParts csv_parts(const QuadValue& c) {
  return {c.rational_part().get_num().get_str(), c.rational_part().get_den().get_str(),
          c.surd_part().get_num().get_str(), c.surd_part().get_den().get_str()};
}

}  // namespace detail

template <typename C>
std::string series_csv(const QSeries<C>& s) {
  std::ostringstream os;
  os << "m,r_num,r_den,s_num,s_den\n";
  for (const auto& [m, c] : s.terms()) {
    auto p = detail::csv_parts(c);
    os << m << "," << p.r_num << "," << p.r_den << "," << p.s_num << "," << p.s_den << "\n";
  }
  return os.str();
}

inline std::string series_csv(const QSeries<double>& s) {
  std::ostringstream os;
  os << "m,value\n";
  for (const auto& [m, c] : s.terms()) os << m << "," << format_double(c) << "\n";
  return os.str();
}

inline nlohmann::json rational_json(const Rat& q) {
  nlohmann::json j;
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    j["num"] = q.get_num().get_si();
    j["den"] = q.get_den().get_si();
  } else {
    j["num"] = q.get_num().get_str();
    j["den"] = q.get_den().get_str();
  }
  return j;
}

inline nlohmann::json value_json(const Int& c) {
  return {{"r", rational_json(Rat(c))}, {"s", rational_json(Rat(0))}, {"D", 0}};
}
inline nlohmann::json value_json(const Rat& c) {
  return {{"r", rational_json(c)}, {"s", rational_json(Rat(0))}, {"D", 0}};
}
inline nlohmann::json value_json(const QuadValue& c) {
  return {{"r", rational_json(c.rational_part())},
          {"s", rational_json(c.surd_part())},
          {"D", c.radicand()}};
}

template <typename C>
nlohmann::json series_json(const QSeries<C>& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : s.terms()) terms.push_back({{"m", m}, {"c", value_json(c)}});
  return {{"schema", kSeriesSchema}, {"order", s.order()}, {"terms", terms}};
}

inline nlohmann::json series_json(const QSeries<double>& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : s.terms())
    terms.push_back({{"m", m}, {"c", format_double(c)}});
  return {{"schema", kSeriesSchema}, {"order", s.order()}, {"numeric", true}, {"terms", terms}};
}

inline nlohmann::json verdict_json(const DesignVerdict& v) {
  nlohmann::json j{{"schema", kVerdictSchema},
                   {"m", v.m},
                   {"shell_size", v.shell_size},
                   {"max_strength", v.max_strength}};
  if (v.failing_degree) j["failing_degree"] = *v.failing_degree;
  return j;
}

inline std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream os;
  os << "disc,a,b,c,m,shell_size,max_strength,trichotomy_tag\n";
  for (const auto& r : rows) {
    os << r.disc << "," << r.form.a << "," << r.form.b << "," << r.form.c << "," << r.m
       << "," << r.verdict.shell_size << "," << r.verdict.max_strength << ","
       << disc_class_tag(r.disc_class) << "\n";
  }
  return os.str();
}

inline nlohmann::json scan_json(const std::vector<ScanRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    arr.push_back({{"disc", r.disc},
                   {"form", {r.form.a, r.form.b, r.form.c}},
                   {"m", r.m},
                   {"shell_size", r.verdict.shell_size},
                   {"max_strength", r.verdict.max_strength},
                   {"trichotomy_tag", disc_class_tag(r.disc_class)}});
  }
  return {{"schema", kScanSchema}, {"rows", arr}};
}

inline nlohmann::json report_json(const CampaignReport& rep) {
  nlohmann::json j{{"schema", kReportSchema},
                   {"name", rep.name},
                   {"bound", rep.bound},
                   {"status", rep.pass() ? "pass" : "fail"},
                   {"checked_count", rep.checked_count},
                   {"elapsed_seconds", rep.elapsed_seconds}};
  if (rep.coeff_bound) j["coeff_bound"] = rep.coeff_bound;
  if (rep.coeff_checked) j["coeff_checked"] = rep.coeff_checked;
  if (rep.first_failure) j["first_failure"] = *rep.first_failure;
  return j;
}

inline std::string h3_text(const H3Result& r) {
  std::ostringstream os;
  auto cubic_str = [](const std::array<long long, 4>& c) {
    std::ostringstream cs;
    cs << c[0] << "*x^3";
    if (c[1]) cs << (c[1] > 0 ? " + " : " - ") << std::abs(c[1]) << "*x^2";
    if (c[2]) cs << (c[2] > 0 ? " + " : " - ") << std::abs(c[2]) << "*x";
    if (c[3]) cs << (c[3] > 0 ? " + " : " - ") << std::abs(c[3]);
    return cs.str();
  };
  auto root_str = [](double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::string(buf);
  };
  os << "cubic_a: " << cubic_str(r.cubic_a) << "\n";
  os << "cubic_b: " << cubic_str(r.cubic_b) << "\n";
  for (int i = 0; i < 3; ++i) os << "a" << i + 1 << " = " << root_str(r.roots_a[i]) << "\n";
  for (int i = 0; i < 3; ++i) os << "b" << i + 1 << " = " << root_str(r.roots_b[i]) << "\n";
  os << "pairing:";
  for (int i = 0; i < 3; ++i) os << " (a" << i + 1 << ",b" << r.pairing[i] + 1 << ")";
  os << "\n";
  for (int i = 0; i < 3; ++i)
    os << "recursion residual " << i + 1 << ": " << format_double(r.residuals[i]) << "\n";
  for (int i = 0; i < 3; ++i)
    os << "psi" << i + 1 << ": " << expansion_text(r.forms[i]) << "\n";
  return os.str();
}

inline nlohmann::json h3_json(const H3Result& r) {
  nlohmann::json j{{"schema", kH3Schema},
                   {"cubic_a", r.cubic_a},
                   {"cubic_b", r.cubic_b},
                   {"pairing", r.pairing}};
  auto root12 = [](double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::string(buf);
  };
  for (int i = 0; i < 3; ++i) {
    j["roots_a"].push_back(root12(r.roots_a[i]));
    j["roots_b"].push_back(root12(r.roots_b[i]));
    j["residuals"].push_back(format_double(r.residuals[i]));
    j["forms"].push_back(series_json(r.forms[i]));
  }
  return j;
}

}  // namespace qlat::io
