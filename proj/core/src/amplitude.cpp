#include "pqosc/amplitude.hpp"

#include <cmath>

namespace pqosc {

void PhasedComplex::add_term(long qpow, std::complex<double> c) {
  if (c == 0.0) return;
  auto it = terms_.find(qpow);
  if (it == terms_.end()) {
    terms_.emplace(qpow, c);
  } else {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

PhasedComplex PhasedComplex::from(std::complex<double> c) {
  PhasedComplex a;
  a.add_term(0, c);
  return a;
}

PhasedComplex PhasedComplex::phase(long qpow) {
  PhasedComplex a;
  a.add_term(qpow, 1.0);
  return a;
}

PhasedComplex& PhasedComplex::operator+=(const PhasedComplex& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

PhasedComplex& PhasedComplex::operator-=(const PhasedComplex& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

PhasedComplex PhasedComplex::operator*(const PhasedComplex& o) const {
  PhasedComplex out;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) out.add_term(ka + kb, ca * cb);
  return out;
}

PhasedComplex& PhasedComplex::mul_complex(std::complex<double> c) {
  if (c == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

PhasedComplex& PhasedComplex::mul_sqrt(double radicand) {
  return mul_complex(std::sqrt(radicand));
}

PhasedComplex& PhasedComplex::mul_qpow(long k) {
  if (k == 0) return *this;
  std::map<long, std::complex<double>> shifted;
  for (auto& [kk, v] : terms_) shifted.emplace(kk + k, v);
  terms_.swap(shifted);
  return *this;
}

PhasedComplex PhasedComplex::conjugated() const {
  PhasedComplex out;
  for (const auto& [k, v] : terms_) out.terms_.emplace(-k, std::conj(v));
  return out;
}

std::complex<double> PhasedComplex::realize(double theta) const {
  std::complex<double> acc = 0.0;
  for (const auto& [k, v] : terms_) acc += v * QPhase{k}.realize(theta);
  return acc;
}

long PhasedComplex::min_qpow() const { return terms_.begin()->first; }
long PhasedComplex::max_qpow() const { return terms_.rbegin()->first; }

}  // namespace pqosc
