#include "tenspec/freemod.hpp"

#include <algorithm>
#include <stdexcept>

namespace tenspec::idealcalc {

using boolflat::FieldDesc;

SmallRing SmallRing::zmod(unsigned m) {
  if (m < 2 || m > 1000) throw std::invalid_argument("SmallRing: modulus must be in [2, 1000]");
  SmallRing r;
  r.m_ = m;
  return r;
}

SmallRing SmallRing::product(std::vector<FieldDesc> fields) {
  if (fields.empty()) throw std::invalid_argument("SmallRing: empty product");
  SmallRing r;
  r.fields_ = std::move(fields);
  return r;
}

SmallRing SmallRing::parse(const std::string& descriptor) {
  std::string s;
  for (char c : descriptor)
    if (!isspace(static_cast<unsigned char>(c))) s.push_back(tolower(static_cast<unsigned char>(c)));
  if (s.rfind("z/", 0) == 0) return zmod(std::stoul(s.substr(2)));
  return product(boolflat::ProductRing::parse(s).factors());
}

unsigned SmallRing::modulus() const {
  if (!m_) throw std::invalid_argument("SmallRing: not Z/m");
  return *m_;
}

const std::vector<FieldDesc>& SmallRing::fields() const {
  if (m_) throw std::invalid_argument("SmallRing: not a product of fields");
  return fields_;
}

std::string SmallRing::str() const {
  if (m_) return "Z/" + std::to_string(*m_);
  std::string out;
  for (size_t i = 0; i < fields_.size(); ++i) {
    if (i) out += "x";
    out += fields_[i].str();
  }
  return out;
}

SmallRing::Elem SmallRing::zero() const {
  return Elem(m_ ? 1 : fields_.size(), Rational(0));
}

SmallRing::Elem SmallRing::one() const {
  return Elem(m_ ? 1 : fields_.size(), Rational(1));
}

SmallRing::Elem SmallRing::normalize(Elem e) const {
  if (m_) {
    if (e.size() != 1 || !e[0].is_integer())
      throw std::invalid_argument("SmallRing: Z/m elements are single residues");
    BigInt v = e[0].num() % BigInt(static_cast<long>(*m_));
    if (v < 0) v += *m_;
    e[0] = Rational(v);
    return e;
  }
  if (e.size() != fields_.size()) throw std::invalid_argument("SmallRing: coordinate mismatch");
  for (size_t i = 0; i < e.size(); ++i) e[i] = boolflat::field_normalize(fields_[i], e[i]);
  return e;
}

SmallRing::Elem SmallRing::add(const Elem& a, const Elem& b) const {
  Elem out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return normalize(std::move(out));
}

SmallRing::Elem SmallRing::mul(const Elem& a, const Elem& b) const {
  Elem out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return normalize(std::move(out));
}

bool SmallRing::is_zero_elem(const Elem& e) const {
  for (const auto& v : normalize(e))
    if (!v.is_zero()) return false;
  return true;
}

std::optional<std::vector<SmallRing::Elem>> SmallRing::enumerate() const {
  if (m_) {
    std::vector<Elem> out;
    for (unsigned v = 0; v < *m_; ++v) out.push_back({Rational(static_cast<long>(v))});
    return out;
  }
  uint64_t total = 1;
  for (const auto& f : fields_) {
    if (f.p == 0) return std::nullopt;  // Q coordinate: infinite
    total *= f.p;
    if (total > 100000) return std::nullopt;
  }
  std::vector<Elem> out;
  Elem cur(fields_.size(), Rational(0));
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == fields_.size()) {
      out.push_back(cur);
      return;
    }
    for (unsigned v = 0; v < fields_[i].p; ++v) {
      cur[i] = Rational(static_cast<long>(v));
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

bool SmallPrime::contains(const SmallRing& ring, const SmallRing::Elem& e) const {
  const auto n = ring.normalize(e);
  if (p) return n[0].num() % BigInt(static_cast<long>(*p)) == 0;
  return n[*omitted].is_zero();
}

std::vector<SmallPrime> ring_primes(const SmallRing& ring) {
  std::vector<SmallPrime> out;
  if (ring.is_zmod()) {
    unsigned m = ring.modulus();
    for (unsigned p = 2; p <= m; ++p) {
      if (m % p) continue;
      bool prime = true;
      for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) prime = false;
      if (prime) out.push_back({"(" + std::to_string(p) + ")", p, std::nullopt});
      while (m % p == 0) m /= p;
    }
    std::sort(out.begin(), out.end(),
              [](const SmallPrime& a, const SmallPrime& b) { return *a.p < *b.p; });
    return out;
  }
  for (size_t i = 0; i < ring.fields().size(); ++i)
    out.push_back({"M" + std::to_string(i + 1), std::nullopt, i});
  return out;
}

RMat rmat_zero(const SmallRing& ring, size_t rows, size_t cols) {
  return {rows, cols, std::vector<SmallRing::Elem>(rows * cols, ring.zero())};
}

RMat rmat_mul(const SmallRing& ring, const RMat& x, const RMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("rmat_mul: shape mismatch");
  RMat out = rmat_zero(ring, x.rows, y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t k = 0; k < x.cols; ++k)
      for (size_t j = 0; j < y.cols; ++j)
        out.a[i * y.cols + j] =
            ring.add(out.a[i * y.cols + j], ring.mul(x.at(i, k), y.at(k, j)));
  return out;
}

RMat rmat_kron(const SmallRing& ring, const RMat& x, const RMat& y) {
  RMat out = rmat_zero(ring, x.rows * y.rows, x.cols * y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t j = 0; j < x.cols; ++j)
      for (size_t k = 0; k < y.rows; ++k)
        for (size_t l = 0; l < y.cols; ++l)
          out.a[(i * y.rows + k) * out.cols + j * y.cols + l] = ring.mul(x.at(i, j), y.at(k, l));
  return out;
}

SmallRing::Elem rmat_trace(const SmallRing& ring, const RMat& x) {
  if (x.rows != x.cols) throw std::invalid_argument("rmat_trace: not square");
  SmallRing::Elem acc = ring.zero();
  for (size_t i = 0; i < x.rows; ++i) acc = ring.add(acc, x.at(i, i));
  return acc;
}

bool rmat_is_zero(const SmallRing& ring, const RMat& x) {
  for (const auto& e : x.a)
    if (!ring.is_zero_elem(e)) return false;
  return true;
}

bool freemod_ideal_member(const SmallRing& ring, const SmallPrime& prime, const RMat& f) {
  for (const auto& e : f.a)
    if (!prime.contains(ring, e)) return false;
  return true;
}

bool freemod_trace_star_member(const SmallRing& ring, const SmallPrime& prime, const RMat& f) {
  // run over matrix units g = E_{ji}: tr(g f) picks out the (i, j) entry
  for (size_t j = 0; j < f.rows; ++j)
    for (size_t i = 0; i < f.cols; ++i) {
      RMat g = rmat_zero(ring, f.cols, f.rows);
      g.a[i * f.rows + j] = ring.one();
      if (!prime.contains(ring, rmat_trace(ring, rmat_mul(ring, g, f)))) return false;
    }
  return true;
}

namespace {

// deterministic small element sampler
SmallRing::Elem probe_elem(const SmallRing& ring, unsigned salt) {
  SmallRing::Elem e = ring.zero();
  for (size_t i = 0; i < e.size(); ++i)
    e[i] = Rational(static_cast<long>((salt + 3 * i + 1) % 7) - 3);
  return ring.normalize(std::move(e));
}

}  // namespace

FreeModulesSpectrum spec_free_modules(const SmallRing& ring) {
  FreeModulesSpectrum out{ring,
                          ring_primes(ring),
                          spectral::FinitePoset({"x"}, {}),
                          {},
                          {},
                          false,
                          false,
                          false,
                          std::nullopt};
  const auto& primes = out.primes;
  std::vector<std::string> names;
  for (const auto& p : primes) names.push_back(p.name);
  out.poset = spectral::FinitePoset(names, {});  // zero-dimensional: discrete

  // pi(I(P)) = P: the ideal restricted to End(1) is exactly P
  out.pi_of_ideal_checks = true;
  const auto all = ring.enumerate();
  for (const auto& prime : primes) {
    auto check = [&](const SmallRing::Elem& x) {
      RMat f = rmat_zero(ring, 1, 1);
      f.a[0] = ring.normalize(x);
      if (freemod_ideal_member(ring, prime, f) != prime.contains(ring, x))
        out.pi_of_ideal_checks = false;
    };
    if (all) {
      for (const auto& x : *all) check(x);
    } else {
      for (unsigned s = 0; s < 32; ++s) check(probe_elem(ring, s));
    }
  }

  // windowed integrality of each quotient: f ⊗ g ∈ I(P) forces f or g inside;
  // exhaustive on 1x1 when the ring is finite, deterministic probes on ranks <= 3
  out.integrality_checks = true;
  for (const auto& prime : primes) {
    if (all) {
      for (const auto& x : *all)
        for (const auto& y : *all) {
          RMat f = rmat_zero(ring, 1, 1), g = rmat_zero(ring, 1, 1);
          f.a[0] = x;
          g.a[0] = y;
          const bool prod_in = freemod_ideal_member(ring, prime, rmat_kron(ring, f, g));
          if (prod_in && !freemod_ideal_member(ring, prime, f) &&
              !freemod_ideal_member(ring, prime, g))
            out.integrality_checks = false;
        }
    }
    for (unsigned s = 0; s < 24; ++s) {
      RMat f = rmat_zero(ring, 2, 3), g = rmat_zero(ring, 3, 2);
      for (size_t i = 0; i < f.a.size(); ++i) f.a[i] = probe_elem(ring, s + 5 * i);
      for (size_t i = 0; i < g.a.size(); ++i) g.a[i] = probe_elem(ring, 2 * s + 7 * i + 1);
      const bool prod_in = freemod_ideal_member(ring, prime, rmat_kron(ring, f, g));
      if (prod_in && !freemod_ideal_member(ring, prime, f) &&
          !freemod_ideal_member(ring, prime, g))
        out.integrality_checks = false;
    }
  }

  // tr*(P) agrees with I(P) on sampled matrices
  out.trace_star_matches = true;
  for (const auto& prime : primes)
    for (unsigned s = 0; s < 24; ++s) {
      RMat f = rmat_zero(ring, 3, 3);
      for (size_t i = 0; i < f.a.size(); ++i) f.a[i] = probe_elem(ring, 3 * s + i);
      if (freemod_trace_star_member(ring, prime, f) != freemod_ideal_member(ring, prime, f))
        out.trace_star_matches = false;
    }

  // the zero ideal is not prime when Z/m is composite: a zero divisor pair
  if (ring.is_zmod() && all) {
    for (const auto& x : *all) {
      if (out.zero_ideal_witness) break;
      for (const auto& y : *all) {
        if (ring.is_zero_elem(x) || ring.is_zero_elem(y)) continue;
        if (ring.is_zero_elem(ring.mul(x, y))) {
          out.zero_ideal_witness = std::make_pair(x, y);
          break;
        }
      }
    }
  }

  // the homeomorphism with Spec R: identity on the discrete point set
  auto desc = spectral::SpectralSpaceDesc::poset(out.poset);
  spectral::FiniteRule rule;
  for (size_t i = 0; i < primes.size(); ++i) rule.images.push_back(spectral::Point(i));
  out.pi = spectral::SpectralMap{desc, desc, rule};
  out.sigma_tr = spectral::SpectralMap{desc, desc, rule};
  return out;
}

}  // namespace tenspec::idealcalc
