#include "tenspec/symgroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tenspec::symgroup {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw std::invalid_argument("Partition: zero part");
    if (i && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

Partition Partition::parse(const std::string& s) {
  std::vector<unsigned> parts;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    pos = comma == std::string::npos ? s.size() : comma + 1;
    if (!tok.empty()) parts.push_back(std::stoul(tok));
  }
  return Partition(std::move(parts));
}

unsigned Partition::r() const { return std::accumulate(parts_.begin(), parts_.end(), 0u); }

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  std::vector<unsigned> conj(parts_[0], 0);
  for (unsigned p : parts_)
    for (unsigned j = 0; j < p; ++j) ++conj[j];
  return Partition(std::move(conj));
}

std::string Partition::str() const {
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::vector<Partition> partitions_of(unsigned r) {
  std::vector<Partition> out;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, unsigned rest, unsigned maxpart) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (unsigned p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, r, r == 0 ? 1 : r);
  return out;
}

Permutation::Permutation(std::vector<unsigned> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (unsigned v : img_) {
    if (v >= img_.size() || seen[v]) throw std::invalid_argument("Permutation: not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(unsigned r) {
  std::vector<unsigned> img(r);
  std::iota(img.begin(), img.end(), 0u);
  return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (size() != other.size()) throw std::invalid_argument("Permutation: size mismatch");
  std::vector<unsigned> img(size());
  for (unsigned i = 0; i < size(); ++i) img[i] = img_[other.img_[i]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<unsigned> img(size());
  for (unsigned i = 0; i < size(); ++i) img[img_[i]] = i;
  return Permutation(std::move(img));
}

int Permutation::sign() const {
  int s = 1;
  for (const auto& c : cycles(*this))
    if (c.size() % 2 == 0) s = -s;
  return s;
}

bool Permutation::is_identity() const {
  for (unsigned i = 0; i < size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::vector<Permutation> symmetric_group(unsigned r) {
  std::vector<unsigned> img(r);
  std::iota(img.begin(), img.end(), 0u);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<std::vector<unsigned>> cycles(const Permutation& sigma) {
  std::vector<std::vector<unsigned>> out;
  std::vector<bool> seen(sigma.size(), false);
  for (unsigned i = 0; i < sigma.size(); ++i) {
    if (seen[i]) continue;
    std::vector<unsigned> cyc;
    unsigned j = i;
    while (!seen[j]) {
      seen[j] = true;
      cyc.push_back(j);
      j = sigma(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

Partition cycle_type(const Permutation& sigma) {
  std::vector<unsigned> lens;
  for (const auto& c : cycles(sigma)) lens.push_back(static_cast<unsigned>(c.size()));
  std::sort(lens.rbegin(), lens.rend());
  return Partition(std::move(lens));
}

GroupAlgElem GroupAlgElem::unit(const Permutation& sigma, const Rational& c) {
  GroupAlgElem e(sigma.size());
  e.add(sigma, c);
  return e;
}

Rational GroupAlgElem::coeff(const Permutation& sigma) const {
  auto it = c_.find(sigma);
  return it == c_.end() ? Rational(0) : it->second;
}

GroupAlgElem& GroupAlgElem::add(const Permutation& sigma, const Rational& c) {
  if (sigma.size() != r_) throw std::invalid_argument("GroupAlgElem: wrong S_r");
  auto it = c_.find(sigma);
  if (it == c_.end()) {
    if (!c.is_zero()) c_.emplace(sigma, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  }
  return *this;
}

GroupAlgElem GroupAlgElem::operator+(const GroupAlgElem& o) const {
  GroupAlgElem out = *this;
  for (const auto& [s, c] : o.c_) out.add(s, c);
  return out;
}

GroupAlgElem GroupAlgElem::operator*(const GroupAlgElem& o) const {
  if (r_ != o.r_) throw std::invalid_argument("GroupAlgElem: wrong S_r");
  GroupAlgElem out(r_);
  for (const auto& [s, cs] : c_)
    for (const auto& [t, ct] : o.c_) out.add(s.compose(t), cs * ct);
  return out;
}

GroupAlgElem GroupAlgElem::scale(const Rational& c) const {
  GroupAlgElem out(r_);
  if (c.is_zero()) return out;
  for (const auto& [s, cs] : c_) out.add(s, cs * c);
  return out;
}

namespace {

// All permutations of {0..r-1} fixing everything outside the given blocks and
// permuting each block within itself.
std::vector<Permutation> block_group(unsigned r, const std::vector<std::vector<unsigned>>& blocks) {
  std::vector<Permutation> out{Permutation::identity(r)};
  for (const auto& block : blocks) {
    std::vector<unsigned> perm(block.size());
    std::iota(perm.begin(), perm.end(), 0u);
    std::vector<Permutation> extended;
    do {
      std::vector<unsigned> img(r);
      std::iota(img.begin(), img.end(), 0u);
      for (size_t i = 0; i < block.size(); ++i) img[block[i]] = block[perm[i]];
      const Permutation b(std::move(img));
      for (const auto& prev : out) extended.push_back(prev.compose(b));
    } while (std::next_permutation(perm.begin(), perm.end()));
    out = std::move(extended);
  }
  return out;
}

GroupAlgElem symmetrizer_for_tableau(const Partition& lambda,
                                     const std::vector<std::vector<unsigned>>& tableau) {
  const unsigned r = lambda.r();
  std::vector<std::vector<unsigned>> cols;
  const auto conj = lambda.conjugate();
  for (size_t j = 0; j < conj.parts().size(); ++j) {
    std::vector<unsigned> col;
    for (size_t i = 0; i < conj.parts()[j]; ++i) col.push_back(tableau[i][j]);
    cols.push_back(std::move(col));
  }
  GroupAlgElem a(r), b(r);
  for (const auto& p : block_group(r, tableau)) a.add(p, Rational(1));
  for (const auto& q : block_group(r, cols)) b.add(q, Rational(q.sign()));
  return a * b;
}

}  // namespace

GroupAlgElem young_symmetrizer(const Partition& lambda) {
  const unsigned r = lambda.r();
  std::vector<std::vector<unsigned>> tableau;
  unsigned next = 0;
  for (unsigned p : lambda.parts()) {
    std::vector<unsigned> row(p);
    std::iota(row.begin(), row.end(), next);
    next += p;
    tableau.push_back(std::move(row));
  }
  (void)r;
  return symmetrizer_for_tableau(lambda, tableau);
}

GroupAlgElem young_symmetrizer_conjugate(const Partition& lambda, const Permutation& sigma) {
  if (sigma.size() != lambda.r()) throw std::invalid_argument("young_symmetrizer: wrong S_r");
  std::vector<std::vector<unsigned>> tableau;
  unsigned next = 0;
  for (unsigned p : lambda.parts()) {
    std::vector<unsigned> row(p);
    for (auto& cell : row) cell = sigma(next++);
    tableau.push_back(std::move(row));
  }
  return symmetrizer_for_tableau(lambda, tableau);
}

BigInt factorial(unsigned n) {
  BigInt f(1);
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt hook_dimension(const Partition& lambda) {
  const auto conj = lambda.conjugate();
  BigInt hooks(1);
  for (size_t i = 0; i < lambda.parts().size(); ++i)
    for (size_t j = 0; j < lambda.parts()[i]; ++j) {
      const unsigned arm = lambda.parts()[i] - j - 1;
      const unsigned leg = conj.parts()[j] - i - 1;
      hooks *= (arm + leg + 1);
    }
  BigInt f = factorial(lambda.r());
  return f / hooks;
}

}  // namespace tenspec::symgroup
