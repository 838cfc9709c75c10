#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "cache.hpp"
#include "commands.hpp"
#include "tenspec/parallel.hpp"

namespace {

// Options shared by every subcommand; stored straight into the request map.
void add_param_option(CLI::App* cmd, tsc::Request& req, const std::string& name,
                      const std::string& help, bool flag = false) {
  if (flag) {
    cmd->add_flag_callback(
        "--" + name, [&req, name] { req.params[name] = "1"; }, help);
  } else {
    cmd->add_option_function<std::string>(
        "--" + name, [&req, name](const std::string& v) { req.params[name] = v; }, help);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact tensor-ideal and spectrum computations for diagram categories"};
  app.require_subcommand(1);

  tsc::Request req;
  tsc::CacheConfig cache;
  unsigned threads = 1;

  if (const char* env = std::getenv("TSC_CACHE_DIR")) cache.directory = env;

  app.add_option("--format", req.format, "output format: table or json")
      ->check(CLI::IsMember({"table", "json"}));
  app.add_option("--cache-dir", cache.directory, "cache directory (default: TSC_CACHE_DIR)");
  app.add_flag("--no-cache", cache.bypass, "bypass the cache entirely");
  app.add_flag("--verify", cache.verify, "recompute and compare against cached payloads");
  app.add_option("--threads", threads, "worker threads (results are identical for any count)");

  struct Sub {
    const char* name;
    const char* help;
    std::vector<std::pair<const char*, const char*>> opts;
    std::vector<std::pair<const char*, const char*>> flags;
    const char* action = nullptr;
  };
  const std::vector<Sub> subs{
      {"hom", "dimension and canonical basis of a diagram Hom space",
       {{"word", "source word over {u,d}"}, {"coword", "target word over {u,d}"}}, {}},
      {"gram", "trace form of an endomorphism space: determinant, kernel, roots",
       {{"word", "endomorphism word"}, {"t", "loop value: generic or a rational"}}, {}},
      {"radical", "trace-form radical spans on a word window",
       {{"t", "loop value: generic or a rational"},
        {"max-word-len", "window size (words up to this length)"},
        {"max-power", "tensor-power bound for the nilpotence probe"}},
       {{"nilpotence-probe", "probe a radical element for tensor-power nilpotence"}}},
      {"kernel", "kernel of the evaluation functor at (p|q) on a window",
       {{"kernel", "p,q"}, {"max-word-len", "window size"}}, {}},
      {"chain", "verified prefix of the prime chain at integer loop value n",
       {{"n", "integer loop value"},
        {"max-r", "chain prefix length"},
        {"max-word-len", "window size"}}, {}},
      {"schur", "vanishing of a Schur functor applied to the generator",
       {{"lambda", "partition, e.g. 1,1"},
        {"t", "rational loop value"},
        {"kernel", "p,q selecting an evaluation kernel"}},
       {{"radical", "test against the trace radical instead of a kernel"},
        {"at-unit", "apply the symmetrizer at the unit object"}}},
      {"boolean", "Boolean algebra of idempotents: orth | correspondence | cont",
       {{"atoms", "atom count for orth"},
        {"gens", "semicolon-separated 1-based atom sets, e.g. 1,2;2,3"},
        {"ring", "ring descriptor, e.g. Q^3 or F2xF3"}},
       {}, "action"},
      {"projcat", "projective-module model category: serre | checks",
       {{"ring", "ring descriptor"},
        {"max-dim", "rank bound for randomized checks"},
        {"seed", "random seed"}},
       {}, "action"},
      {"spec", "spectrum of the free-module category over a small ring",
       {{"ring", "Z/m or a product of prime fields"}}, {}},
      {"patch", "constructible refinement of a space, with closed-set queries",
       {{"space", "omega-chain or poset:a<b,a<c"},
        {"query-closed", "|-separated set descriptors to classify"}}, {}},
  };

  for (const auto& sub : subs) {
    CLI::App* cmd = app.add_subcommand(sub.name, sub.help);
    cmd->fallthrough();
    if (sub.action) {
      cmd->add_option_function<std::string>(
             "action", [&req](const std::string& v) { req.params["action"] = v; },
             "subaction")
          ->required();
    }
    for (const auto& [name, help] : sub.opts) add_param_option(cmd, req, name, help);
    for (const auto& [name, help] : sub.flags) add_param_option(cmd, req, name, help, true);
    cmd->callback([&req, name = std::string(sub.name)] { req.command = name; });
  }

  CLI11_PARSE(app, argc, argv);
  tenspec::parallel::set_threads(threads);

  try {
    const nlohmann::json payload = tsc::cache_get_or_compute(
        cache, req.canonical(), [&] { return tsc::run_request(req); });
    std::cout << tsc::render(payload, req.format);
    if (req.format == "json") std::cout << "\n";
    return tsc::exit_code_for(payload);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
