// Acceptance suite: one verdict line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "tenspec/boolflat.hpp"
#include "tenspec/freemod.hpp"
#include "tenspec/idealcalc.hpp"
#include "tenspec/parallel.hpp"
#include "tenspec/projcat.hpp"
#include "tenspec/spectral.hpp"
#include "tenspec/wbcat.hpp"

using namespace tenspec;
using wbcat::Parameter;
using wbcat::WBMorphism;
using wbcat::Word;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

Word W(const char* s) { return Word::parse(s); }

std::vector<Word> words_of_length_up_to(size_t max_len) {
  std::vector<Word> out{Word()};
  for (size_t len = 1; len <= max_len; ++len)
    for (size_t mask = 0; mask < (size_t{1} << len); ++mask) {
      std::vector<wbcat::Letter> letters;
      for (size_t i = 0; i < len; ++i)
        letters.push_back(mask & (size_t{1} << i) ? wbcat::Letter::Down : wbcat::Letter::Up);
      out.emplace_back(std::move(letters));
    }
  return out;
}

// 1. At generic t every endomorphism Gram determinant over words of length
//    <= 4 is nonzero with integer roots only; exactly t^4 - t^2 on "uu".
Outcome criterion1() {
  Outcome out;
  for (const auto& w : words_of_length_up_to(4)) {
    const auto analysis = idealcalc::gram_analysis(w);
    out.require(!analysis.det.is_zero(), "zero determinant on " + w.str());
    if (!analysis.det.is_zero())
      out.require(analysis.roots.all_integer, "non-integer root on " + w.str());
  }
  out.require(idealcalc::gram_analysis(W("uu")).det == Poly::t(4) - Poly::t(2),
              "End(uu) determinant is not t^4 - t^2");
  return out;
}

// 2. The trace radical at t = n equals the kernel ideal at (n|0), as exact
//    subspaces, on every pair of the length-<=3 window, for n in {1, 2}.
Outcome criterion2() {
  Outcome out;
  const auto window = idealcalc::ProbeWindow::words_up_to(3);
  for (unsigned n : {1u, 2u}) {
    const auto radical = idealcalc::tr_star(window, Rational(static_cast<long>(n)));
    const auto kernel = idealcalc::functor_kernel_ideal(n, 0, window);
    out.require(radical == kernel, "radical and kernel differ at n = " + std::to_string(n));
  }
  return out;
}

// 3. Kernel chain inclusions with strict witnesses: identity-minus-swap
//    separates (1|0) from (2|1) at n = 1, the strand identity separates the
//    radical from (1|1) at n = 0.
Outcome criterion3() {
  Outcome out;
  const auto window = idealcalc::ProbeWindow::words_up_to(3);
  const auto k10 = idealcalc::functor_kernel_ideal(1, 0, window);
  const auto k21 = idealcalc::functor_kernel_ideal(2, 1, window);
  out.require(k10.includes(k21), "kernel at (2|1) not inside kernel at (1|0)");
  const auto witness = WBMorphism::identity(W("uu"), Parameter::at(Rational(1))) -
                       wbcat::braiding(W("u"), W("u"), Parameter::at(Rational(1)));
  out.require(k10.member(witness), "identity minus swap missing from the (1|0) kernel");
  out.require(!k21.member(witness), "identity minus swap not strict against (2|1)");

  const auto radical0 = idealcalc::tr_star(window, Rational(0));
  const auto k11 = idealcalc::functor_kernel_ideal(1, 1, window);
  out.require(radical0.includes(k11), "kernel at (1|1) not inside the radical at t = 0");
  const auto strand = WBMorphism::identity(W("u"), Parameter::at(Rational(0)));
  out.require(radical0.member(strand), "strand identity missing from the radical at t = 0");
  out.require(!k11.member(strand), "strand identity not strict against (1|1)");
  return out;
}

// 4. Twisted power traces for a square-zero endomorphism profile: the
//    identity indicator on group elements, and 1 on every Young symmetrizer.
Outcome criterion4() {
  Outcome out;
  const std::vector<Rational> profile{Rational(1), Rational(0), Rational(0), Rational(0),
                                      Rational(0)};
  for (unsigned r = 1; r <= 5; ++r) {
    for (const auto& sigma : symgroup::symmetric_group(r)) {
      const Rational got = wbcat::twisted_power_trace(profile, symgroup::GroupAlgElem::unit(sigma));
      out.require(got == Rational(sigma.is_identity() ? 1 : 0), "indicator failed in S_" +
                                                                    std::to_string(r));
      if (!out.pass) return out;
    }
    for (const auto& lambda : symgroup::partitions_of(r)) {
      const Rational got =
          wbcat::twisted_power_trace(profile, symgroup::young_symmetrizer(lambda));
      out.require(got == Rational(1), "symmetrizer trace not 1 at " + lambda.str());
    }
  }
  return out;
}

// 5. Schur vanishing: the wedge square dies at (1|0), survives at (2|1), and
//    the wedge square of the unit object is identically zero.
Outcome criterion5() {
  Outcome out;
  const symgroup::Partition wedge({1, 1});
  out.require(idealcalc::schur_vanishes(wedge, idealcalc::FunctorKernelTag{1, 0}, Rational(1)),
              "wedge square did not vanish at (1|0)");
  out.require(!idealcalc::schur_vanishes(wedge, idealcalc::FunctorKernelTag{2, 1}, Rational(1)),
              "wedge square vanished at (2|1)");
  out.require(idealcalc::symmetrizer_unit_scalar(wedge).is_zero(),
              "wedge square of the unit is nonzero");
  return out;
}

// 6. Boolean-algebra layer: orthogonalization on 500 random families over up
//    to 6 atoms; ideal/idempotent round trips exhaustive to k = 5; the
//    coordinate-function isomorphism on Q^k.
Outcome criterion6() {
  Outcome out;
  std::mt19937 rng(2026);
  for (int trial = 0; trial < 500 && out.pass; ++trial) {
    const size_t k = 1 + trial % 6;
    const boolflat::ProductRing ring(
        std::vector<boolflat::FieldDesc>(k, boolflat::FieldDesc{0}));
    std::uniform_int_distribution<uint32_t> mask(0, (1u << k) - 1);
    std::vector<boolflat::BoolElem> gens;
    boolflat::BoolElem total;
    for (size_t i = 0; i < 1 + trial % 4; ++i) {
      std::set<size_t> s;
      const uint32_t m = mask(rng);
      for (size_t b = 0; b < k; ++b)
        if (m & (1u << b)) s.insert(b);
      gens.emplace_back(s);
      total = total.bxor(gens.back().bxor(total.band(gens.back())));
    }
    const auto result = boolflat::orthogonalize(ring, gens);
    for (size_t i = 0; i < result.orthogonal.size(); ++i)
      for (size_t j = i + 1; j < result.orthogonal.size(); ++j)
        out.require(result.orthogonal[i].orthogonal_to(result.orthogonal[j]),
                    "family not orthogonal");
    // same generated ideal: unions agree and every output sits below it
    out.require(result.principal == total, "principal generator differs from the union");
    for (const auto& e : result.orthogonal)
      out.require(e.subset_of(total), "output escapes the generated ideal");
    for (const auto& g : gens)
      out.require(g.band(result.principal) == g, "generator is not a multiple of the principal");
  }
  for (size_t k = 1; k <= 5; ++k) {
    const boolflat::ProductRing ring(
        std::vector<boolflat::FieldDesc>(k, boolflat::FieldDesc{0}));
    out.require(boolflat::verify_ideal_correspondence(ring),
                "round trip failed at k = " + std::to_string(k));
    out.require(boolflat::verify_cont_iso(ring),
                "coordinate isomorphism failed at k = " + std::to_string(k));
  }
  return out;
}

// 7. The projective-module model: support product rule, Serre-ideal count and
//    round trip, quotient fullness, joint faithfulness, factor decomposition.
Outcome criterion7() {
  Outcome out;
  for (const char* ring : {"F2xF2", "F2xF2xF2"}) {
    const auto checks = projcat::run_model_checks(boolflat::ProductRing::parse(ring), 2, 11);
    out.require(checks.all(), std::string("model checks failed over ") + ring);
    out.require(checks.serre_count_ok, std::string("Serre count wrong over ") + ring);
  }
  const auto rational = projcat::run_model_checks(boolflat::ProductRing::parse("Q^3"), 2, 12);
  out.require(rational.all(), "model checks failed over Q^3");
  out.require(projcat::enumerate_serre_ideals(boolflat::ProductRing::parse("Q^3")).size() == 8,
              "Serre ideal count is not 2^3");
  return out;
}

// 8. Spectra: the free-module spectrum of Z/12, the patch grammar on the
//    omega chain and finite posets, and the section/retraction identities.
Outcome criterion8() {
  Outcome out;
  const auto spec12 = idealcalc::spec_free_modules(idealcalc::SmallRing::parse("Z/12"));
  out.require(spec12.poset.size() == 2, "Spec Z/12 is not two points");
  out.require(spec12.primes[0].name == "(2)" && spec12.primes[1].name == "(3)",
              "wrong primes for Z/12");
  out.require(spec12.pi_of_ideal_checks && spec12.integrality_checks && spec12.trace_star_matches,
              "free-module ideal verifications failed");
  out.require(spectral::check_spectral_map(spec12.pi) &&
                  spectral::check_spectral_map(spec12.sigma_tr),
              "free-module structure maps not spectral");
  for (size_t i = 0; i < 2; ++i)
    out.require(std::get<size_t>(spec12.pi.apply(spec12.sigma_tr.apply(spectral::Point(i)))) == i,
                "pi after sigma_tr is not the identity on Spec Z/12");

  const auto chain = spectral::SpectralSpaceDesc::omega();
  const auto patched = spectral::patch(chain);
  out.require(spectral::is_hausdorff(patched), "patched chain not Hausdorff");
  out.require(spectral::is_closed(patched, spectral::OmegaSet::finite({}, true)),
              "singleton at infinity not closed in the patch");
  out.require(!spectral::is_closed(chain, spectral::OmegaSet::finite({}, true)),
              "singleton at infinity closed in the chain topology");
  out.require(spectral::is_closed(patched, spectral::OmegaSet::finite({2, 5})),
              "finite sets not closed in the patch");
  out.require(spectral::is_closed(patched, spectral::OmegaSet::cofinite({1})),
              "cofinite-with-infinity sets not closed in the patch");
  out.require(!spectral::is_closed(patched, spectral::OmegaSet::cofinite({1}, false)),
              "cofinite set without infinity closed in the patch");
  for (unsigned r = 0; r < 6; ++r) {
    out.require(spectral::is_closed(chain, spectral::OmegaSet::interval(r)),
                "interval not closed in the chain topology");
    out.require(spectral::is_closed(patched, spectral::OmegaSet::interval(r)),
                "interval not closed in the patch");
  }

  for (const char* desc : {"poset:a", "poset:a<b", "poset:a<b,a<c", "poset:a<c,b<c,a<d"}) {
    const auto space = spectral::SpectralSpaceDesc::parse(desc);
    const auto flat = spectral::patch(space);
    out.require(spectral::is_hausdorff(flat), std::string("patch not Hausdorff for ") + desc);
    const size_t n = flat.as_poset().size();
    for (uint32_t m = 0; m < (1u << n); ++m) {
      std::set<size_t> s;
      for (size_t i = 0; i < n; ++i)
        if (m & (1u << i)) s.insert(i);
      out.require(spectral::is_closed(flat, s), std::string("patch not discrete for ") + desc);
    }
  }

  const auto proj = projcat::spectrum(boolflat::ProductRing::parse("Q^3"));
  out.require(spectral::check_spectral_map(proj.sigma) && spectral::check_spectral_map(proj.pi),
              "model-category structure maps not spectral");
  for (size_t i = 0; i < 3; ++i)
    out.require(std::get<size_t>(proj.pi.apply(proj.sigma.apply(spectral::Point(i)))) == i,
                "pi after sigma is not the identity on the model spectrum");

  const auto prefix = idealcalc::chain_spectrum(1, 1, idealcalc::ProbeWindow::words_up_to(2));
  out.require(prefix.maps_spectral && prefix.pi_sigma_identity,
              "chain structure maps failed verification");
  return out;
}

// 9. Tensor-square stability of the base ideal: products of radical elements
//    regenerate the whole radical on the length-<=3 window at n = 1.
Outcome criterion9() {
  Outcome out;
  const auto window = idealcalc::ProbeWindow::words_up_to(3);
  const auto m0 = idealcalc::tr_star(window, Rational(1));
  const auto square = idealcalc::tensor_square_span(m0, &m0);
  out.require(square == m0, "tensor square differs from the ideal on the window");
  return out;
}

// 10. Determinism: representative payloads behind the criteria are
//     byte-identical across worker counts.
Outcome criterion10() {
  Outcome out;
  using tsc::Request;
  std::vector<Request> requests;
  auto add = [&](const char* command,
                 std::initializer_list<std::pair<const char*, const char*>> params) {
    Request req;
    req.command = command;
    for (const auto& [k, v] : params) req.params[k] = v;
    requests.push_back(std::move(req));
  };
  add("gram", {{"word", "uu"}, {"t", "generic"}});
  add("gram", {{"word", "uudd"}, {"t", "generic"}});
  add("radical", {{"t", "1"}, {"max-word-len", "3"}});
  add("radical", {{"t", "2"}, {"max-word-len", "3"}});
  add("kernel", {{"kernel", "1,0"}, {"max-word-len", "3"}});
  add("kernel", {{"kernel", "2,1"}, {"max-word-len", "3"}});
  add("chain", {{"n", "1"}, {"max-r", "1"}, {"max-word-len", "3"}});
  add("chain", {{"n", "0"}, {"max-r", "1"}, {"max-word-len", "2"}});
  add("schur", {{"lambda", "1,1"}, {"kernel", "1,0"}, {"t", "1"}});
  add("boolean", {{"action", "orth"}, {"atoms", "3"}, {"gens", "1,2;2,3"}});
  add("projcat", {{"action", "checks"}, {"ring", "F2xF2"}, {"max-dim", "2"}, {"seed", "5"}});
  add("spec", {{"ring", "Z/12"}});
  add("patch", {{"space", "omega-chain"}, {"query-closed", "[0,3]|{inf}"}});
  for (const auto& req : requests) {
    parallel::set_threads(1);
    const std::string single = tsc::run_request(req).dump();
    parallel::set_threads(4);
    const std::string multi = tsc::run_request(req).dump();
    parallel::set_threads(1);
    out.require(single == multi, "thread-dependent payload for " + req.command);
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"generic Gram determinants: nonzero, integer roots, t^4 - t^2 on uu", criterion1},
      {"trace radical equals the (n|0) kernel ideal for n in {1, 2}", criterion2},
      {"kernel chain inclusions with strict witnesses at n = 1 and n = 0", criterion3},
      {"twisted power traces: identity indicator and symmetrizer value 1", criterion4},
      {"Schur vanishing at (1|0) versus (2|1), and at the unit object", criterion5},
      {"Boolean layer: orthogonalization, ideal round trips, coordinate iso", criterion6},
      {"projective-module model checks and Serre ideal counts", criterion7},
      {"spectra: Z/12, patch grammar, sections and retractions", criterion8},
      {"tensor-square stability of the radical on the window", criterion9},
      {"byte-identical payloads across thread counts", criterion10},
  };
  bool all_pass = true;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2zu: %s (%.2fs) %s%s\n", i + 1, outcome.pass ? "PASS" : "FAIL",
                seconds, criteria[i].first.c_str(),
                outcome.detail.empty() ? "" : ("; " + outcome.detail).c_str());
    std::fflush(stdout);
    all_pass &= outcome.pass;
  }
  return all_pass ? 0 : 1;
}
