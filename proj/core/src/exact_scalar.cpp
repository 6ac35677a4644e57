#include "pqosc/exact_scalar.hpp"

#include <cmath>

namespace pqosc {

namespace {

// sqrt(prod atoms^e) = folded * factor * sqrt(m): even exponents fold into
// the rational part, the odd-residual product canonicalizes through
// canonical_sqrt. Returns {folded * factor, m}.
std::pair<Rational, Rational> normalize_atoms(const ExactScalar::Atoms& atoms) {
  Rational folded(1);
  Rational residual(1);
  for (const auto& [atom, e] : atoms) {
    if (e < 0) throw domain_error("ExactScalar: negative radical exponent");
    if (e / 2 > 0) folded *= rational_pow(atom, e / 2);
    if (e % 2 != 0) residual *= atom;
  }
  auto [factor, m] = canonical_sqrt(residual);
  return {folded * factor, m};
}

}  // namespace

void ExactScalar::merge_term(const Key& key, const Term& term, int sign) {
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    Term t = term;
    if (sign < 0) t.coeff = -t.coeff;
    terms_.emplace(key, std::move(t));
    return;
  }
  it->second.coeff += sign < 0 ? -term.coeff : term.coeff;
  if (it->second.coeff == 0) {
    terms_.erase(it);
    return;
  }
  if (it->second.atoms != term.atoms) {
    // Commensurable radicals merged along different routes: fall back to the
    // canonical integer radicand for any later multiplication.
    it->second.atoms = Atoms{{key.radicand, 1}};
  }
}

void ExactScalar::add_term(long qpow, Atoms atoms, const Rational& c) {
  if (c == 0) return;
  for (const auto& [atom, e] : atoms) {
    if (atom == 0) return;  // a vanishing radical factor kills the term
    if (atom < 0) throw domain_error("ExactScalar: negative radicand");
  }
  std::erase_if(atoms, [](const auto& kv) { return kv.second == 0 || kv.first == 1; });
  auto [fold, m] = normalize_atoms(atoms);
  Rational coeff_norm = c * fold;
  if (coeff_norm == 0) return;
  merge_term(Key{qpow, m}, Term{std::move(coeff_norm), std::move(atoms)}, +1);
}

ExactScalar ExactScalar::from_rational(const Rational& c) {
  ExactScalar s;
  s.add_term(0, {}, c);
  return s;
}

ExactScalar ExactScalar::from_sqrt(const Rational& radicand) {
  if (radicand < 0) throw domain_error("ExactScalar: negative radicand");
  ExactScalar s;
  s.add_term(0, Atoms{{radicand, 1}}, Rational(1));
  return s;
}

ExactScalar ExactScalar::phase(long qpow) {
  ExactScalar s;
  s.add_term(qpow, {}, Rational(1));
  return s;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  for (const auto& [key, term] : o.terms_) merge_term(key, term, +1);
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  for (const auto& [key, term] : o.terms_) merge_term(key, term, -1);
  return *this;
}

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
  ExactScalar out;
  for (const auto& [ka, ta] : terms_) {
    auto [fold_a, ma] = normalize_atoms(ta.atoms);
    Rational ca = ta.coeff / fold_a;  // relative to the atom product
    for (const auto& [kb, tb] : o.terms_) {
      auto [fold_b, mb] = normalize_atoms(tb.atoms);
      Rational cb = tb.coeff / fold_b;
      Atoms merged = ta.atoms;
      for (const auto& [atom, e] : tb.atoms) merged[atom] += e;
      out.add_term(ka.qpow + kb.qpow, std::move(merged), ca * cb);
    }
  }
  return out;
}

ExactScalar& ExactScalar::mul_rational(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, term] : terms_) term.coeff *= c;
  return *this;
}

ExactScalar& ExactScalar::mul_sqrt(const Rational& radicand) {
  if (radicand < 0) throw domain_error("ExactScalar: negative radicand");
  std::map<Key, Term> old;
  old.swap(terms_);
  if (radicand == 0) return *this;
  for (const auto& [key, term] : old) {
    auto [fold, m] = normalize_atoms(term.atoms);
    Atoms atoms = term.atoms;
    ++atoms[radicand];
    add_term(key.qpow, std::move(atoms), term.coeff / fold);
  }
  return *this;
}

ExactScalar& ExactScalar::mul_qpow(long k) {
  if (k == 0) return *this;
  std::map<Key, Term> shifted;
  for (auto& [key, term] : terms_) shifted.emplace(Key{key.qpow + k, key.radicand}, term);
  terms_.swap(shifted);
  return *this;
}

ExactScalar ExactScalar::conjugated() const {
  ExactScalar out;
  for (const auto& [key, term] : terms_) out.terms_.emplace(Key{-key.qpow, key.radicand}, term);
  return out;
}

std::complex<double> ExactScalar::realize(double theta) const {
  std::complex<double> acc = 0.0;
  for (const auto& [key, term] : terms_) {
    // |coeff| sqrt(m) through the exact square first: coeff and m can each
    // leave the double range even when their product does not.
    double magnitude = std::sqrt(to_double(term.coeff * term.coeff * key.radicand));
    if (term.coeff < 0) magnitude = -magnitude;
    acc += magnitude * QPhase{key.qpow}.realize(theta);
  }
  return acc;
}

}  // namespace pqosc
