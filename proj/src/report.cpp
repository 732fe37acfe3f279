#include "opineq/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>

namespace opineq {

std::string to_string(Relation r) {
  switch (r) {
    case Relation::LessEqual: return "le";
    case Relation::Equal: return "eq";
    case Relation::Agree: return "agree";
  }
  return "le";
}

Relation parse_relation(const std::string& s) {
  if (s == "le") return Relation::LessEqual;
  if (s == "eq") return Relation::Equal;
  if (s == "agree") return Relation::Agree;
  raise(ErrorKind::ParseError, "unknown relation '" + s + "'");
}

const std::string* BoundReport::param(const std::string& key) const {
  for (const auto& [k, v] : params) {
    if (k == key) return &v;
  }
  return nullptr;
}

double tolerance(double lhs, double rhs, double tol_rel) {
  return tol_rel * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

void judge(BoundReport& r, double tol_rel) {
  r.slack = r.rhs - r.lhs;
  r.indeterminate = false;
  if (!std::isfinite(r.lhs) || !std::isfinite(r.rhs)) {
    r.holds = false;
    return;
  }
  switch (r.relation) {
    case Relation::LessEqual:
      r.holds = r.lhs <= r.rhs + tolerance(r.lhs, r.rhs, tol_rel);
      break;
    case Relation::Equal:
      r.holds = std::abs(r.lhs - r.rhs) <= tolerance(r.lhs, r.rhs, tol_rel);
      break;
    case Relation::Agree: {
      auto classify = [tol_rel](double gap) {
        if (gap <= tol_rel) return 1;
        if (gap > kParallelIndeterminateCeiling) return 0;
        return -1;
      };
      const int a = classify(r.lhs), b = classify(r.rhs);
      if (a < 0 || b < 0) {
        r.indeterminate = true;
        r.holds = true;
      } else {
        r.holds = a == b;
      }
      break;
    }
  }
}

BoundReport make_report(std::string check_id, double lhs, double rhs, Params params,
                        std::uint64_t digest, Relation relation) {
  BoundReport r;
  r.check_id = std::move(check_id);
  r.lhs = lhs;
  r.rhs = rhs;
  r.relation = relation;
  r.params = std::move(params);
  r.input_digest = digest;
  judge(r);
  return r;
}

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void Digest::bytes(const void* p, std::size_t n) {
  const auto* c = static_cast<const unsigned char*>(p);
  for (std::size_t i = 0; i < n; ++i) {
    h_ ^= c[i];
    h_ *= 0x100000001b3ULL;
  }
}

Digest& Digest::add(const ComplexMatrix& a) {
  add(static_cast<std::int64_t>(a.rows()));
  add(static_cast<std::int64_t>(a.cols()));
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      add(a(i, j).real());
      add(a(i, j).imag());
    }
  }
  return *this;
}

Digest& Digest::add(double v) {
  if (v == 0.0) v = 0.0;  // fold -0
  std::uint64_t bits;
  std::memcpy(&bits, &v, sizeof bits);
  unsigned char le[8];
  for (int k = 0; k < 8; ++k) le[k] = static_cast<unsigned char>(bits >> (8 * k));
  bytes(le, 8);
  return *this;
}

Digest& Digest::add(std::int64_t v) {
  unsigned char le[8];
  const auto u = static_cast<std::uint64_t>(v);
  for (int k = 0; k < 8; ++k) le[k] = static_cast<unsigned char>(u >> (8 * k));
  bytes(le, 8);
  return *this;
}

Digest& Digest::add(const std::string& s) {
  add(static_cast<std::int64_t>(s.size()));
  bytes(s.data(), s.size());
  return *this;
}

std::string digest_hex(std::uint64_t d) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(d));
  return buf;
}

}  // namespace opineq
