#include "wenger/family.hpp"

#include <algorithm>
#include <string>

#include "wenger/error.hpp"
#include "wenger/linalg.hpp"

namespace wenger {

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::wenger: return "wenger";
    case FamilyKind::linearized: return "linearized";
    case FamilyKind::custom: return "custom";
  }
  return "unknown";
}

FamilyKind parse_family_kind(std::string_view name) {
  if (name == "wenger") return FamilyKind::wenger;
  if (name == "linearized") return FamilyKind::linearized;
  if (name == "custom") return FamilyKind::custom;
  throw Error(ErrorCode::parse_error, "unknown family '" + std::string(name) + "'");
}

Family::Family(FamilySpec spec) : spec_(std::move(spec)), field_(spec_.p, spec_.e, spec_.modulus) {
  if (spec_.m < 1) throw Error(ErrorCode::invalid_argument, "m must be at least 1");
  if (spec_.kind != FamilyKind::custom) {
    if (!spec_.custom_f.empty()) throw Error(ErrorCode::invalid_argument, "f-list is only valid for the custom family");
    return;
  }

  if (spec_.custom_f.size() != spec_.m) {
    throw Error(ErrorCode::invalid_argument, "custom family needs exactly m = " + std::to_string(spec_.m) +
                                                 " polynomials, got " + std::to_string(spec_.custom_f.size()));
  }
  for (const auto& poly : spec_.custom_f) {
    std::vector<FieldElement> coeffs;
    for (std::uint64_t c : poly) coeffs.push_back(field_.element(c));
    custom_coeffs_.push_back(std::move(coeffs));
  }

  // theta(u) = (1, f_2(u), ...): injective iff the tails are pairwise distinct.
  const std::uint64_t q = field_.order();
  std::vector<std::vector<std::uint64_t>> images;
  images.reserve(q);
  for (std::uint64_t u = 0; u < q; ++u) {
    const FieldElement x = field_.element(u);
    std::vector<std::uint64_t> img;
    for (unsigned k = 2; k <= spec_.m + 1; ++k) img.push_back(field_.index(f(k, x)));
    images.push_back(std::move(img));
  }
  std::sort(images.begin(), images.end());
  theta_injective_ = std::adjacent_find(images.begin(), images.end()) == images.end();
}

FieldElement Family::f(unsigned k, const FieldElement& x) const {
  if (k < 2 || k > spec_.m + 1) throw Error(ErrorCode::out_of_range, "f_k index out of range");
  switch (spec_.kind) {
    case FamilyKind::wenger:
      return field_.pow(x, k - 1);
    case FamilyKind::linearized:
      return field_.frobenius(x, k - 2);
    case FamilyKind::custom: {
      // Horner, highest coefficient first.
      const auto& coeffs = custom_coeffs_[k - 2];
      FieldElement acc = field_.zero();
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
      return acc;
    }
  }
  throw Error(ErrorCode::unsupported_family, "unknown family");
}

std::size_t Family::function_rank() const {
  const std::uint64_t q = field_.order();
  std::vector<std::vector<FieldElement>> rows(spec_.m + 1);
  for (std::uint64_t u = 0; u < q; ++u) {
    const FieldElement x = field_.element(u);
    rows[0].push_back(field_.one());
    for (unsigned k = 2; k <= spec_.m + 1; ++k) rows[k - 1].push_back(f(k, x));
  }
  return fq_rank(field_, std::move(rows));
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<Fp> parse_modulus(std::string_view text) {
  std::vector<Fp> coeffs;
  for (std::string_view part : split(text, ',')) {
    part = strip(part);
    if (part.empty()) throw Error(ErrorCode::parse_error, "empty modulus coefficient");
    std::uint64_t v = 0;
    for (char ch : part) {
      if (ch < '0' || ch > '9') throw Error(ErrorCode::parse_error, "bad modulus coefficient '" + std::string(part) + "'");
      v = v * 10 + static_cast<unsigned>(ch - '0');
      if (v >= kMaxPrime) throw Error(ErrorCode::parse_error, "modulus coefficient too large");
    }
    coeffs.push_back(static_cast<Fp>(v));
  }
  return coeffs;
}

std::vector<std::vector<std::uint64_t>> parse_f_list(std::string_view text, Fp p, unsigned e) {
  if (p > 36) throw Error(ErrorCode::parse_error, "f-list digit strings support p <= 36 only");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) q *= p;

  std::vector<std::vector<std::uint64_t>> polys;
  for (std::string_view poly : split(text, ';')) {
    std::vector<std::uint64_t> coeffs;
    for (std::string_view digits : split(poly, ',')) {
      digits = strip(digits);
      if (digits.empty()) throw Error(ErrorCode::parse_error, "empty coefficient in f-list");
      std::uint64_t v = 0;
      for (char ch : digits) {
        unsigned d;
        if (ch >= '0' && ch <= '9') {
          d = static_cast<unsigned>(ch - '0');
        } else if (ch >= 'a' && ch <= 'z') {
          d = static_cast<unsigned>(ch - 'a') + 10;
        } else {
          throw Error(ErrorCode::parse_error, "bad digit '" + std::string(1, ch) + "' in f-list");
        }
        if (d >= p) throw Error(ErrorCode::parse_error, "digit out of range for base p in f-list");
        v = v * p + d;
        if (v >= q) throw Error(ErrorCode::parse_error, "f-list coefficient exceeds field order");
      }
      coeffs.push_back(v);
    }
    polys.push_back(std::move(coeffs));
  }
  return polys;
}

}  // namespace wenger
