#include "cycone/cohom.hpp"

#include <algorithm>
#include <stdexcept>

namespace cycone {

CohomologyTable& CohomologyTable::operator+=(const CohomologyTable& o) {
  h0 += o.h0;
  h1 += o.h1;
  h2 += o.h2;
  chi += o.chi;
  return *this;
}

namespace {

std::int64_t binom2(std::int64_t n) { return n * (n - 1) / 2; }  // C(n, 2)

// chi(O(k)) as a polynomial in k.
std::int64_t chi_line(std::int64_t k) { return (k + 1) * (k + 2) / 2; }

// Upper bound on the number of summands produced by one symmetric power.
constexpr std::size_t kMaxAtoms = 1'000'000;

void multisets(const std::vector<std::int64_t>& degrees, std::int64_t p, std::size_t start, std::int64_t acc,
               std::vector<SheafAtom>& out) {
  if (p == 0) {
    out.push_back({0, acc});
    return;
  }
  for (std::size_t i = start; i < degrees.size(); ++i) multisets(degrees, p - 1, i, acc + degrees[i], out);
}

std::vector<SheafAtom> normalize_rec(const SheafExpr& e) {
  using K = SheafExpr::Kind;
  switch (e.kind) {
    case K::Line: return {{0, e.a}};
    case K::SymTangent: return {{std::max<std::int64_t>(e.a, 0), e.b}};
    case K::Sum: {
      std::vector<SheafAtom> out;
      for (const auto& c : e.children) {
        auto part = normalize_rec(c);
        out.insert(out.end(), part.begin(), part.end());
      }
      return out;
    }
    case K::Twist: {
      auto out = normalize_rec(e.children.at(0));
      for (auto& atom : out) atom.twist += e.a;
      return out;
    }
    case K::Dual: {
      // (S^a T(b))^dual = S^a Omega(-b) = S^a T(-3a - b), since Omega = T(-3).
      auto out = normalize_rec(e.children.at(0));
      for (auto& atom : out) atom.twist = -3 * atom.power - atom.twist;
      return out;
    }
    case K::End: {
      const auto inner = normalize_rec(e.children.at(0));
      if (std::any_of(inner.begin(), inner.end(), [](const SheafAtom& x) { return x.power != 0; }))
        throw UnsupportedExpression(e.to_string());
      std::vector<SheafAtom> out;
      for (const auto& x : inner)
        for (const auto& y : inner) out.push_back({0, y.twist - x.twist});
      return out;
    }
    case K::Sym: {
      const std::int64_t p = e.a;
      if (p <= 0) return {{0, 0}};
      auto inner = normalize_rec(e.children.at(0));
      if (p == 1) return inner;
      if (std::all_of(inner.begin(), inner.end(), [](const SheafAtom& x) { return x.power == 0; })) {
        // C(n + p - 1, p) summands; refuse absurd sizes up front.
        double count = 1;
        for (std::int64_t i = 1; i <= p; ++i) count = count * static_cast<double>(inner.size() + i - 1) / i;
        if (count > kMaxAtoms) throw UnsupportedExpression(e.to_string() + " (too many summands)");
        std::vector<std::int64_t> degrees;
        for (const auto& x : inner) degrees.push_back(x.twist);
        std::vector<SheafAtom> out;
        multisets(degrees, p, 0, 0, out);
        return out;
      }
      if (inner.size() == 1 && inner[0].power == 1) {
        // S^p (T(b)) = S^p T(p b)
        return {{p, p * inner[0].twist}};
      }
      if (inner.size() == 1 && inner[0].power == 2 && p == 2) {
        // S^2 S^2 H = S^4 H (+) det(H)^2 for rank-2 H; with S^2 T (x) O(c):
        // S^2(S^2 T (x) O(c)) = S^4 T(2c) (+) O(2c + 6).
        const std::int64_t c = inner[0].twist;
        return {{4, 2 * c}, {0, 2 * c + 6}};
      }
      throw UnsupportedExpression(e.to_string());
    }
  }
  throw std::logic_error("normalize: unknown node");
}

ChernCharacter operator+(const ChernCharacter& x, const ChernCharacter& y) {
  return {x.rank + y.rank, x.ch1 + y.ch1, x.ch2 + y.ch2};
}

ChernCharacter operator*(const ChernCharacter& x, const ChernCharacter& y) {
  return {x.rank * y.rank, x.rank * y.ch1 + y.rank * x.ch1, x.rank * y.ch2 + y.rank * x.ch2 + x.ch1 * y.ch1};
}

ChernCharacter ch_line(std::int64_t k) { return {1, k, Rational(k * k, 2)}; }

ChernCharacter adams(const ChernCharacter& v, std::int64_t i) {
  return {v.rank, v.ch1 * Rational(i), v.ch2 * Rational(i * i)};
}

// Newton identity p * ch(S^p V) = sum_{i=1..p} psi^i(ch V) * ch(S^(p-i) V).
ChernCharacter ch_sym(const ChernCharacter& v, std::int64_t p) {
  if (p <= 0) return ch_line(0);
  std::vector<ChernCharacter> s{ch_line(0)};
  for (std::int64_t k = 1; k <= p; ++k) {
    ChernCharacter acc{0, 0, 0};
    for (std::int64_t i = 1; i <= k; ++i) acc = acc + adams(v, i) * s[k - i];
    const Rational inv(1, k);
    s.push_back({acc.rank * inv, acc.ch1 * inv, acc.ch2 * inv});
  }
  return s.back();
}

ChernCharacter ch_tangent() { return {2, 3, Rational(3, 2)}; }

}  // namespace

std::int64_t h0_line(std::int64_t k) { return k < 0 ? 0 : binom2(k + 2); }

CohomologyTable cohom_line(std::int64_t k) {
  CohomologyTable t;
  t.h0 = h0_line(k);
  t.h2 = h0_line(-3 - k);
  t.h1 = 0;
  t.chi = t.h0 + t.h2;
  return t;
}

CohomologyTable cohom_symT(std::int64_t a, std::int64_t b) {
  if (a <= 0) return cohom_line(b);
  const std::int64_t rank_mid = binom2(a + 2);  // rank of S^a(O(1)^3)
  const std::int64_t rank_sub = binom2(a + 1);  // rank of S^(a-1)(O(1)^3)
  auto h0 = [&](std::int64_t twist) {
    return rank_mid * h0_line(a + twist) - rank_sub * h0_line(a + twist - 1);
  };
  CohomologyTable t;
  t.h0 = h0(b);
  // Serre duality: h^2(S^a T(b)) = h^0(S^a Omega(-b-3)) = h^0(S^a T(-3a-b-3)).
  t.h2 = h0(-3 * a - b - 3);
  t.chi = rank_mid * chi_line(a + b) - rank_sub * chi_line(a + b - 1);
  t.h1 = t.h0 + t.h2 - t.chi;
  if (t.h1 < 0) throw std::logic_error("cohom_symT: negative h1");
  return t;
}

std::vector<SheafAtom> normalize(const SheafExpr& e) {
  auto out = normalize_rec(e);
  std::sort(out.begin(), out.end());
  return out;
}

CohomologyTable cohom_expr(const SheafExpr& e) {
  CohomologyTable total;
  for (const auto& atom : normalize(e)) total += cohom_symT(atom.power, atom.twist);
  return total;
}

ChernCharacter chern_character(const SheafExpr& e) {
  using K = SheafExpr::Kind;
  switch (e.kind) {
    case K::Line: return ch_line(e.a);
    case K::SymTangent: return ch_sym(ch_tangent(), e.a) * ch_line(e.b);
    case K::Sum: {
      ChernCharacter acc{0, 0, 0};
      for (const auto& c : e.children) acc = acc + chern_character(c);
      return acc;
    }
    case K::Twist: return chern_character(e.children.at(0)) * ch_line(e.a);
    case K::Dual: {
      const auto v = chern_character(e.children.at(0));
      return {v.rank, -v.ch1, v.ch2};
    }
    case K::End: {
      const auto v = chern_character(e.children.at(0));
      return ChernCharacter{v.rank, -v.ch1, v.ch2} * v;
    }
    case K::Sym: return ch_sym(chern_character(e.children.at(0)), e.a);
  }
  throw std::logic_error("chern_character: unknown node");
}

std::int64_t chi_rr(const SheafExpr& e) {
  const auto v = chern_character(e);
  return (v.ch2 + Rational(3, 2) * v.ch1 + v.rank).to_int();
}

H0MinusK h0_minus_K(const BundleSpec& spec) {
  H0MinusK out;
  if (auto expr = spec.minus_k_pushforward_expr()) {
    try {
      out.value = cohom_expr(*expr).h0;
      out.gt1 = to_tri(*out.value > 1);
      out.reason = "exact";
      return out;
    } catch (const UnsupportedExpression&) {
      // fall through to the criterion
    }
  }
  if (spec.chern().gamma() >= -18) {
    out.gt1 = Tri::True;
    out.reason = "gamma_ge_minus_18";
  } else {
    out.gt1 = Tri::Unknown;
    out.reason = "undecided";
  }
  return out;
}

}  // namespace cycone
