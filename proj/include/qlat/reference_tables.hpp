#pragma once

// Small reference tables for the fields in scope: fundamental discriminants,
// reduced nonprincipal forms, eigenform combination scalings, the smallest
// ramified nonprincipal norm with its eigenform coefficient, small-norm
// ideal counts, and the d=23 solver reference values.  Everything here is
// re-derived by the library and cross-checked by verify_reference_tables().

#include <array>
#include <cstdint>

namespace qlat::ref {

struct H1Field {
  long long d;
  long long dK;
};

// Class number 1 (d = 1, 3 excluded from eigenform scope).
inline constexpr std::array<H1Field, 7> h1_fields = {{
    {2, -8},
    {7, -7},
    {11, -11},
    {19, -19},
    {43, -43},
    {67, -67},
    {163, -163},
}};

struct H2Field {
  long long d;
  long long dK;
  std::array<long long, 3> a_form;  // reduced nonprincipal form (a, b, c)
  long long c2_num, c2_den;         // eigenform scaling c2 (c1 is always 1/2)
  long long ram_norm;               // smallest ramified nonprincipal norm m
  long long ram_coeff;              // eigenform coefficient b(m), = +-m
};

inline constexpr std::array<H2Field, 18> h2_fields = {{
    {5, -20, {2, 2, 3}, 1, 2, 2, 2},
    {6, -24, {2, 0, 3}, 1, 2, 2, 2},
    {10, -40, {2, 0, 5}, 1, 2, 2, 2},
    {13, -52, {2, 2, 7}, 1, 2, 2, 2},
    {15, -15, {2, 1, 2}, 2, 1, 3, -3},
    {22, -88, {2, 0, 11}, 1, 2, 2, 2},
    {35, -35, {3, 1, 3}, 3, 1, 5, -5},
    {37, -148, {2, 2, 19}, 1, 2, 2, 2},
    {51, -51, {3, 3, 5}, 1, 2, 3, 3},
    {58, -232, {2, 0, 29}, 1, 2, 2, 2},
    {91, -91, {5, 3, 5}, 5, 3, 7, -7},
    {115, -115, {5, 5, 7}, 1, 2, 5, -5},
    {123, -123, {3, 3, 11}, 1, 2, 3, 3},
    {187, -187, {7, 3, 7}, 7, 3, 11, -11},
    {235, -235, {5, 5, 13}, 1, 2, 5, 5},
    {267, -267, {3, 3, 23}, 1, 2, 3, 3},
    {403, -403, {11, 9, 11}, 11, 9, 13, -13},
    {427, -427, {7, 7, 17}, 1, 2, 7, 7},
}};

struct NormCount {
  long long n;
  long long count;
};

// Ideal counts by norm for d = 2, 5, 23 (small norms).
inline constexpr std::array<NormCount, 4> d2_ideal_counts = {{{1, 1}, {2, 1}, {3, 2}, {4, 1}}};
inline constexpr std::array<NormCount, 6> d5_ideal_counts = {{{1, 1}, {2, 1}, {3, 2}, {4, 1}, {5, 1}, {6, 2}}};
inline constexpr std::array<NormCount, 10> d23_ideal_counts = {{{1, 1}, {2, 2}, {3, 2}, {4, 3}, {5, 0}, {6, 4}, {7, 0}, {8, 4}, {9, 3}, {10, 0}}};

struct Term {
  long long m;
  long long c;
};

// Leading eigenform expansions: d=2 and the two d=5 variants through q^9.
inline constexpr std::array<Term, 7> d2_eigenform = {{{1, 1}, {2, -2}, {3, -2}, {4, 4}, {6, 4}, {8, -8}, {9, -5}}};
inline constexpr std::array<Term, 9> d5_eigenform_v1 = {{{1, 1}, {2, 2}, {3, -4}, {4, 4}, {5, -5}, {6, -8}, {7, 4}, {8, 8}, {9, 7}}};
inline constexpr std::array<Term, 9> d5_eigenform_v2 = {{{1, 1}, {2, -2}, {3, 4}, {4, 4}, {5, -5}, {6, -8}, {7, -4}, {8, -8}, {9, 7}}};

// d=23 solver references: eliminant cubics (descending coefficients), their
// real roots to 6 significant digits, and the root pairing a_i <-> b_{pair[i]}.
inline constexpr std::array<long long, 4> h3_cubic_a = {512, 0, -96, 7};
inline constexpr std::array<long long, 4> h3_cubic_b = {512, 0, -2208, 1587};
inline constexpr std::array<double, 3> h3_roots_a = {-0.465681, 0.0751832, 0.390498};
inline constexpr std::array<double, 3> h3_roots_b = {-2.37065, 0.873067, 1.49759};
inline constexpr std::array<int, 3> h3_pairing = {1, 0, 2};

}  // namespace qlat::ref
