#include "commands.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tenspec/boolflat.hpp"
#include "tenspec/freemod.hpp"
#include "tenspec/idealcalc.hpp"
#include "tenspec/projcat.hpp"
#include "tenspec/spectral.hpp"
#include "tenspec/supereval.hpp"
#include "tenspec/wbcat.hpp"

namespace tsc {

using nlohmann::json;
using namespace tenspec;

std::string Request::canonical() const {
  json j{{"command", command}, {"params", json::object()}};
  for (const auto& [k, v] : params) j["params"][k] = v;
  return j.dump();
}

namespace {

const std::string& need(const Request& req, const std::string& key) {
  auto it = req.params.find(key);
  if (it == req.params.end())
    throw std::invalid_argument("missing required parameter --" + key);
  return it->second;
}

std::string get_or(const Request& req, const std::string& key, const std::string& fallback) {
  auto it = req.params.find(key);
  return it == req.params.end() ? fallback : it->second;
}

bool has_flag(const Request& req, const std::string& key) {
  return req.params.count(key) > 0;
}

unsigned parse_unsigned(const std::string& s, unsigned max_value) {
  if (s.empty() || !std::all_of(s.begin(), s.end(),
                                [](char c) { return isdigit(static_cast<unsigned char>(c)); }))
    throw std::invalid_argument("expected a nonnegative integer, got '" + s + "'");
  const unsigned long v = std::stoul(s);
  if (v > max_value)
    throw std::invalid_argument("value " + s + " exceeds the cap " + std::to_string(max_value));
  return static_cast<unsigned>(v);
}

std::pair<unsigned, unsigned> parse_pq(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("expected p,q");
  return {parse_unsigned(s.substr(0, comma), 64), parse_unsigned(s.substr(comma + 1), 64)};
}

size_t parse_window_len(const Request& req, size_t fallback, size_t cap) {
  return parse_unsigned(get_or(req, "max-word-len", std::to_string(fallback)),
                        static_cast<unsigned>(cap));
}

// Envelope shared by the ideal-calculus reports.
void attach_report_fields(json& payload, const std::string& statement, size_t window_len,
                          const std::string& verdict, json witnesses, json budget) {
  payload["statement"] = statement;
  payload["window"] = json{{"max_word_len", window_len},
                           {"objects", (size_t{1} << (window_len + 1)) - 1}};
  payload["verdict"] = verdict;
  payload["witnesses"] = std::move(witnesses);
  payload["budget"] = std::move(budget);
}

json pair_spans_payload(const idealcalc::IdealSpan& ideal, bool with_bases) {
  json pairs = json::array();
  for (const auto& [key, basis] : ideal.spans()) {
    json entry{{"src", key.src.str()},
               {"dst", key.dst.str()},
               {"hom_dim", basis.ambient_dim()},
               {"kernel_dim", basis.rank()}};
    if (with_bases && basis.rank() > 0) {
      json rows = json::array();
      for (const auto& row : basis.rows()) {
        json vec = json::array();
        for (const auto& c : row) vec.push_back(c.str());
        rows.push_back(vec);
      }
      entry["basis"] = rows;
    }
    pairs.push_back(entry);
  }
  return pairs;
}

json cmd_hom(const Request& req) {
  const auto w = wbcat::Word::parse(need(req, "word"));
  const auto w2 = wbcat::Word::parse(need(req, "coword"));
  if (w.size() > 8 || w2.size() > 8)
    throw std::invalid_argument("hom: words longer than 8 letters are not enumerated");
  const auto diagrams = wbcat::enumerate_diagrams(w, w2);
  json out{{"word", w.str()}, {"coword", w2.str()}, {"dim", diagrams.size()}};
  if (diagrams.size() <= 500) {
    json list = json::array();
    for (const auto& d : diagrams) list.push_back(d.str(w.size()));
    out["diagrams"] = list;
  } else {
    out["diagrams_omitted"] = true;
  }
  return out;
}

json cmd_gram(const Request& req) {
  const auto w = wbcat::Word::parse(need(req, "word"));
  if (w.size() > 6)
    throw std::invalid_argument("gram: endomorphism words longer than 6 letters exceed the budget");
  const std::string t = get_or(req, "t", "generic");
  if (t == "generic") {
    const auto analysis = idealcalc::gram_analysis(w);
    json roots = json::array();
    if (!analysis.det.is_zero())
      for (const auto& r : analysis.roots.roots) roots.push_back(r.get_str());
    json coeffs = json::array();
    for (const auto& c : analysis.det.coeff_strings()) coeffs.push_back(c);
    return json{{"word", w.str()},
                {"t", "generic"},
                {"dim", analysis.dim},
                {"det", analysis.det.str()},
                {"det_coeffs", coeffs},
                {"kernel_dim", analysis.nullity},
                {"integer_roots", roots},
                {"all_integer_roots", analysis.det.is_zero() ? false : analysis.roots.all_integer}};
  }
  const Rational alpha = Rational::parse(t);
  const auto m = idealcalc::gram_matrix_at(w, w, alpha);
  const size_t dim = m.size();
  const auto kernel = linalg::nullspace(m, dim);
  return json{{"word", w.str()},
              {"t", alpha.str()},
              {"dim", dim},
              {"det", linalg::det(m).str()},
              {"kernel_dim", kernel.size()}};
}

json cmd_radical(const Request& req) {
  const std::string t = get_or(req, "t", "generic");
  const size_t len = parse_window_len(req, 2, t == "generic" ? 3 : 4);
  if (t == "generic") {
    json pairs = json::array();
    const auto window = idealcalc::ProbeWindow::words_up_to(len);
    for (const auto& a : window.objects())
      for (const auto& b : window.objects()) {
        if (a.balance() != b.balance()) continue;
        const auto m = idealcalc::gram_matrix_generic(a, b);
        const size_t dim = m.empty() ? 0 : m[0].size();
        pairs.push_back(json{{"src", a.str()},
                             {"dst", b.str()},
                             {"hom_dim", dim},
                             {"kernel_dim", dim - poly_matrix_rank(m)}});
      }
    return json{{"t", "generic"}, {"max_word_len", len}, {"pairs", pairs}};
  }
  const Rational alpha = Rational::parse(t);
  const auto window = idealcalc::ProbeWindow::words_up_to(len);
  const auto radical = idealcalc::tr_star(window, alpha);
  json out{{"t", alpha.str()},
           {"total_kernel_rank", radical.total_rank()},
           {"pairs", pair_spans_payload(radical, true)}};
  std::string verdict = "computed";
  json witnesses = json::array();
  json budget{{"max_word_len", len}};
  if (has_flag(req, "nilpotence-probe")) {
    const unsigned max_power = parse_unsigned(get_or(req, "max-power", "2"), 8);
    budget["max_power"] = max_power;
    json probe{{"verdict", "unknown"}};
    for (const auto& [key, basis] : radical.spans()) {
      if (basis.rank() == 0) continue;
      if (std::max(key.src.size(), key.dst.size()) * max_power > len) continue;  // power must stay inside
      const auto f = wbcat::WBMorphism::from_coefficients(key.src, key.dst, radical.param(),
                                                          basis.rows()[0]);
      const idealcalc::IdealSpan zero(window, radical.param());
      const auto nil = idealcalc::nilpotent_member(f, zero, max_power);
      probe = json{{"src", key.src.str()},
                   {"dst", key.dst.str()},
                   {"max_power", max_power},
                   {"verdict", nil.found ? "yes" : "unknown"}};
      if (nil.found)
        probe["power"] = nil.power;
      else
        verdict = "unknown";
      witnesses.push_back(probe);
      break;
    }
    out["nilpotence"] = probe;
  }
  attach_report_fields(out, "trace-form radical spans at t = " + alpha.str(), len, verdict,
                       std::move(witnesses), std::move(budget));
  return out;
}

json cmd_kernel(const Request& req) {
  const auto [p, q] = parse_pq(need(req, "kernel"));
  const size_t len = parse_window_len(req, 2, 4);
  const auto window = idealcalc::ProbeWindow::words_up_to(len);
  const auto ideal = idealcalc::functor_kernel_ideal(p, q, window);
  json out{{"p", p},
           {"q", q},
           {"t", ideal.param().alpha().str()},
           {"total_kernel_rank", ideal.total_rank()},
           {"pairs", pair_spans_payload(ideal, true)}};
  attach_report_fields(out,
                       "evaluation kernel at (" + std::to_string(p) + "|" + std::to_string(q) + ")",
                       len, "computed", json::array(),
                       json{{"max_word_len", len}, {"eval_budget", supereval::kEvalBudget}});
  return out;
}

json cmd_chain(const Request& req) {
  const int n = std::stoi(need(req, "n"));
  if (n < -8 || n > 8) throw std::invalid_argument("chain: n must lie in [-8, 8]");
  const unsigned max_r = parse_unsigned(get_or(req, "max-r", "1"), 8);
  const size_t len = parse_window_len(req, 3, 4);
  const auto window = idealcalc::ProbeWindow::words_up_to(len);
  const auto chain = idealcalc::chain_spectrum(n, max_r, window);
  json points = json::array();
  for (unsigned r = 0; r <= max_r; ++r)
    points.push_back(json{{"r", r},
                          {"p", chain.pq[r].first},
                          {"q", chain.pq[r].second},
                          {"total_kernel_rank", chain.ideals[r].total_rank()}});
  json witnesses = json::array();
  for (const auto& w : chain.witnesses) {
    json vec = json::array();
    for (const auto& c : w.coefficients) vec.push_back(c.str());
    const auto morphism = wbcat::WBMorphism::from_coefficients(
        w.pair.src, w.pair.dst, chain.ideals[w.from_r].param(), w.coefficients);
    witnesses.push_back(json{{"from_r", w.from_r},
                             {"src", w.pair.src.str()},
                             {"dst", w.pair.dst.str()},
                             {"coefficients", vec},
                             {"morphism", json::parse(wbcat::to_canonical_json(morphism))}});
  }
  json out{{"n", n},
           {"max_r", max_r},
           {"space", "omega-chain"},
           {"points", points},
           {"m0_is_trace_radical", chain.m0_is_trace_radical},
           {"strict_witnesses", witnesses},
           {"maps_spectral", chain.maps_spectral},
           {"pi_sigma_identity", chain.pi_sigma_identity}};
  attach_report_fields(out, "prime chain prefix at n = " + std::to_string(n), len,
                       "verified-on-window", witnesses,
                       json{{"max_word_len", len},
                            {"max_r", max_r},
                            {"eval_budget", supereval::kEvalBudget}});
  return out;
}

json cmd_schur(const Request& req) {
  const auto lambda = symgroup::Partition::parse(need(req, "lambda"));
  if (has_flag(req, "at-unit")) {
    const Rational scalar = idealcalc::symmetrizer_unit_scalar(lambda);
    return json{{"lambda", lambda.str()},
                {"at_unit", true},
                {"scalar", scalar.str()},
                {"vanishes", scalar.is_zero()}};
  }
  const Rational alpha = Rational::parse(need(req, "t"));
  if (has_flag(req, "radical")) {
    const bool v = idealcalc::schur_vanishes(lambda, idealcalc::TraceRadicalTag{alpha}, alpha);
    return json{{"lambda", lambda.str()}, {"t", alpha.str()}, {"ideal", "trace-radical"},
                {"vanishes", v}};
  }
  const auto [p, q] = parse_pq(need(req, "kernel"));
  if (Rational(static_cast<long>(p) - static_cast<long>(q)) != alpha)
    throw std::invalid_argument("schur: --t must equal p - q");
  const bool v = idealcalc::schur_vanishes(lambda, idealcalc::FunctorKernelTag{p, q}, alpha);
  return json{{"lambda", lambda.str()},
              {"t", alpha.str()},
              {"ideal", "kernel(" + std::to_string(p) + "|" + std::to_string(q) + ")"},
              {"vanishes", v}};
}

std::vector<boolflat::BoolElem> parse_gens(const std::string& s) {
  std::vector<boolflat::BoolElem> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    const size_t semi = s.find(';', pos);
    const std::string tok = s.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
    pos = semi == std::string::npos ? s.size() + 1 : semi + 1;
    if (tok.empty()) continue;
    std::set<size_t> support;
    size_t p2 = 0;
    while (p2 <= tok.size()) {
      const size_t comma = tok.find(',', p2);
      const std::string atom =
          tok.substr(p2, comma == std::string::npos ? std::string::npos : comma - p2);
      p2 = comma == std::string::npos ? tok.size() + 1 : comma + 1;
      if (atom.empty()) continue;
      const unsigned long v = std::stoul(atom);
      if (v == 0) throw std::invalid_argument("boolean: atoms are 1-based");
      support.insert(v - 1);
    }
    out.emplace_back(std::move(support));
  }
  return out;
}

json cmd_boolean(const Request& req) {
  const std::string action = need(req, "action");
  if (action == "orth") {
    const size_t atoms = parse_unsigned(need(req, "atoms"), 20);
    const auto gens = parse_gens(need(req, "gens"));
    const boolflat::ProductRing ring(
        std::vector<boolflat::FieldDesc>(atoms, boolflat::FieldDesc{0}));
    const auto result = boolflat::orthogonalize(ring, gens);
    json fam = json::array();
    for (const auto& e : result.orthogonal) fam.push_back(e.str());
    return json{{"action", "orth"},
                {"atoms", atoms},
                {"orthogonal", fam},
                {"principal", result.principal.str()}};
  }
  if (action == "correspondence") {
    const auto ring = boolflat::ProductRing::parse(need(req, "ring"));
    return json{{"action", "correspondence"},
                {"ring", ring.str()},
                {"ideal_count", size_t{1} << ring.size()},
                {"round_trips_ok", boolflat::verify_ideal_correspondence(ring)}};
  }
  if (action == "cont") {
    const auto ring = boolflat::ProductRing::parse(need(req, "ring"));
    return json{{"action", "cont"},
                {"ring", ring.str()},
                {"points", ring.size()},
                {"isomorphism_ok", boolflat::verify_cont_iso(ring)}};
  }
  throw std::invalid_argument("boolean: unknown action '" + action + "'");
}

json cmd_projcat(const Request& req) {
  const std::string action = need(req, "action");
  const auto ring = boolflat::ProductRing::parse(need(req, "ring"));
  if (action == "serre") {
    const auto ideals = projcat::enumerate_serre_ideals(ring);
    json list = json::array();
    for (const auto& ideal : ideals)
      list.push_back(json{{"support", ideal.objects_supported_in.str()}});
    return json{{"action", "serre"}, {"ring", ring.str()}, {"count", ideals.size()},
                {"ideals", list}};
  }
  if (action == "checks") {
    const unsigned max_dim = parse_unsigned(get_or(req, "max-dim", "2"), 4);
    const unsigned seed = parse_unsigned(get_or(req, "seed", "1"), 1000000000);
    const auto checks = projcat::run_model_checks(ring, max_dim, seed);
    return json{{"action", "checks"},
                {"ring", ring.str()},
                {"max_dim", max_dim},
                {"seed", seed},
                {"serre_count", checks.serre_count},
                {"serre_count_ok", checks.serre_count_ok},
                {"serre_round_trip", checks.serre_round_trip},
                {"support_product_rule", checks.support_product_rule},
                {"support_composition", checks.support_composition},
                {"quotient_fullness", checks.quotient_fullness},
                {"joint_faithfulness", checks.joint_faithfulness},
                {"factor_decomposition", checks.factor_decomposition},
                {"sigma_section", checks.sigma_section},
                {"all_ok", checks.all()}};
  }
  throw std::invalid_argument("projcat: unknown action '" + action + "'");
}

json cmd_spec(const Request& req) {
  const auto ring = idealcalc::SmallRing::parse(need(req, "ring"));
  const auto spec = idealcalc::spec_free_modules(ring);
  json points = json::array();
  for (const auto& p : spec.primes) points.push_back(p.name);
  json out{{"ring", ring.str()},
           {"points", points},
           {"discrete", true},
           {"end_restriction_ok", spec.pi_of_ideal_checks},
           {"integrality_ok", spec.integrality_checks},
           {"trace_star_matches", spec.trace_star_matches},
           {"maps_spectral", spectral::check_spectral_map(spec.pi) &&
                                 spectral::check_spectral_map(spec.sigma_tr)}};
  if (spec.zero_ideal_witness) {
    out["zero_ideal_prime"] = false;
    out["zero_ideal_witness"] = json::array(
        {spec.zero_ideal_witness->first[0].str(), spec.zero_ideal_witness->second[0].str()});
  }
  return out;
}

json cmd_patch(const Request& req) {
  const auto space = spectral::SpectralSpaceDesc::parse(need(req, "space"));
  const auto patched = spectral::patch(space);
  json out{{"space", need(req, "space")},
           {"topology", "constructible"},
           {"hausdorff", spectral::is_hausdorff(patched)}};
  if (auto it = req.params.find("query-closed"); it != req.params.end()) {
    json queries = json::array();
    std::stringstream ss(it->second);
    std::string desc;
    while (std::getline(ss, desc, '|')) {
      spectral::SetDesc set;
      if (space.is_omega()) {
        set = spectral::OmegaSet::parse(desc);
      } else {
        std::set<size_t> pts;
        const auto& poset = space.as_poset();
        std::stringstream ps(desc);
        std::string name;
        while (std::getline(ps, name, ',')) {
          const auto& names = poset.points();
          const auto found = std::find(names.begin(), names.end(), name);
          if (found == names.end()) throw std::invalid_argument("unknown point '" + name + "'");
          pts.insert(found - names.begin());
        }
        set = pts;
      }
      queries.push_back(json{{"set", desc},
                             {"closed_zariski", spectral::is_closed(space, set)},
                             {"closed_patch", spectral::is_closed(patched, set)}});
    }
    out["queries"] = queries;
  }
  return out;
}

}  // namespace

nlohmann::json run_request(const Request& req) {
  if (req.command == "hom") return cmd_hom(req);
  if (req.command == "gram") return cmd_gram(req);
  if (req.command == "radical") return cmd_radical(req);
  if (req.command == "kernel") return cmd_kernel(req);
  if (req.command == "chain") return cmd_chain(req);
  if (req.command == "schur") return cmd_schur(req);
  if (req.command == "boolean") return cmd_boolean(req);
  if (req.command == "projcat") return cmd_projcat(req);
  if (req.command == "spec") return cmd_spec(req);
  if (req.command == "patch") return cmd_patch(req);
  throw std::invalid_argument("unknown command '" + req.command + "'");
}

namespace {

bool has_unknown_verdict(const json& j) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (k == "verdict" && v.is_string() && v.get<std::string>() == "unknown") return true;
      if (has_unknown_verdict(v)) return true;
    }
  } else if (j.is_array()) {
    for (const auto& v : j)
      if (has_unknown_verdict(v)) return true;
  }
  return false;
}

std::string scalar_str(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void flatten(const json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      const std::string path = prefix.empty() ? k : prefix + "." + k;
      flatten(v, path, rows);
    }
  } else if (j.is_array()) {
    const bool all_scalar = std::all_of(j.begin(), j.end(),
                                        [](const json& v) { return !v.is_structured(); });
    if (all_scalar) {
      std::string line = "[";
      for (size_t i = 0; i < j.size(); ++i) {
        if (i) line += ", ";
        line += scalar_str(j[i]);
      }
      rows.emplace_back(prefix, line + "]");
    } else {
      for (size_t i = 0; i < j.size(); ++i)
        flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
    }
  } else {
    rows.emplace_back(prefix, scalar_str(j));
  }
}

}  // namespace

int exit_code_for(const nlohmann::json& payload) {
  return has_unknown_verdict(payload) ? 2 : 0;
}

std::string render(const nlohmann::json& payload, const std::string& format) {
  if (format == "json") return payload.dump();
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(payload, "", rows);
  size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::string out;
  for (const auto& [k, v] : rows) {
    out += k;
    out.append(width - k.size() + 2, ' ');
    out += v;
    out += "\n";
  }
  return out;
}

}  // namespace tsc
