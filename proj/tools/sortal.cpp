#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sortal/chain.hpp"
#include "sortal/examples.hpp"
#include "sortal/substitution.hpp"

using namespace sortal;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::size_t height_cap() {
  if (const char* env = std::getenv("SORTAL_MAX_HEIGHT")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    std::cerr << "warning: ignoring malformed SORTAL_MAX_HEIGHT=\"" << env << "\"\n";
  }
  return 6;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) throw std::ios_base::failure("cannot read file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Signature load_signature(const std::string& path) {
  return parse_signature(read_file(path));
}

Context load_context(const Signature& sig, const std::string& text) {
  Context ctx = Context::parse(text);
  check_context(sig, ctx);
  return ctx;
}

int cmd_validate(const std::string& path) {
  Signature sig = parse_signature_unvalidated(read_file(path));
  std::vector<Diagnostic> diags = validate(sig);
  for (const Diagnostic& d : diags) std::cerr << d.code << ": " << d.message << "\n";
  return diags.empty() ? kExitPass : kExitCheckFailed;
}

int cmd_enumerate(const std::string& path, const std::string& context_text,
                  const std::string& sort_name, std::size_t max_height, bool count_only) {
  Signature sig = load_signature(path);
  Context ctx = load_context(sig, context_text);
  Sort sort{sort_name};
  if (!sig.has_sort(sort)) throw DomainError("unknown sort \"" + sort_name + "\"");
  EnumerateOptions opts;
  opts.height_bound = height_cap();
  std::vector<Term> terms = enumerate_terms(sig, ctx, sort, max_height, opts);
  if (count_only) {
    // cumulative counts per height, one CSV row per level
    for (std::size_t h = 0; h <= max_height; ++h) {
      std::uint64_t count = 0;
      for (const Term& t : terms)
        if (height(t) <= h) ++count;
      std::cout << count_csv_row(h, ctx, sort, count) << "\n";
    }
  } else {
    for (const Term& t : terms) std::cout << print_term(t) << "\n";
  }
  return kExitPass;
}

int cmd_subst(const std::string& path, const std::string& ctx_x_text,
              const std::string& ctx_y_text, const std::string& assign_path,
              const std::string& term_path) {
  Signature sig = load_signature(path);
  Context x = load_context(sig, ctx_x_text);
  Context y = load_context(sig, ctx_y_text);

  nlohmann::json entries;
  try {
    entries = nlohmann::json::parse(read_file(assign_path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("assignment file: malformed JSON: ") + e.what());
  }
  if (!entries.is_object())
    throw ParseError("assignment file: expected an object of index -> term");

  Assignment f;
  f.source = x;
  f.target = y;
  f.map.resize(x.size());
  std::vector<bool> seen(x.size(), false);
  for (auto it = entries.begin(); it != entries.end(); ++it) {
    std::size_t index = 0;
    try {
      std::size_t pos = 0;
      index = std::stoul(it.key(), &pos);
      if (pos != it.key().size()) throw std::invalid_argument(it.key());
    } catch (const std::exception&) {
      throw ParseError("assignment key \"" + it.key() + "\" is not a decimal index");
    }
    if (index >= x.size())
      throw DomainError("assignment index " + std::to_string(index) +
                        " out of range for context-x \"" + x.str() + "\"");
    if (!it.value().is_string())
      throw ParseError("assignment entry " + std::to_string(index) + " must be a term string");
    try {
      f.map[index] = parse_term(sig, y, it.value().get<std::string>(), x[index]);
    } catch (const std::exception& e) {
      throw DomainError("assignment entry " + std::to_string(index) + ": " + e.what());
    }
    seen[index] = true;
  }
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!seen[i]) throw DomainError("assignment missing index " + std::to_string(i));

  Context xy = coproduct(x, y).context;
  Term t = parse_term(sig, xy, read_file(term_path));
  std::cout << print_term(subst(sig, f, t)) << "\n";
  return kExitPass;
}

void emit(const std::vector<Verdict>& verdicts, bool& all_ok) {
  for (const Verdict& v : verdicts) {
    std::cout << v.str() << "\n";
    all_ok = all_ok && v.ok;
  }
}

std::vector<Verdict> chain_suite(const Signature& sig, std::size_t max_level,
                                 std::uint64_t budget) {
  std::vector<Context> contexts{Context{}};
  for (const Sort& s : sig.sorts()) contexts.push_back(Context{{s}});
  for (const Sort& s : sig.sorts())
    for (const Sort& t : sig.sorts()) contexts.push_back(Context{{s, t}});
  ChainOptions opts;
  opts.cell_budget = budget;
  opts.level_bound = std::max<std::size_t>(max_level, opts.level_bound);
  std::vector<Verdict> out;
  for (const Context& ctx : contexts)
    for (const Sort& s : sig.sorts()) {
      Verdict cell = Verdict::pass("chain/bijection", 0);
      for (std::size_t n = 0; n <= max_level; ++n) {
        Verdict v = check_against_terms(sig, ctx, s, n, opts);
        cell.samples += v.samples;
        if (!v.ok) {
          cell.ok = false;
          cell.counterexample = v.counterexample;
          break;
        }
      }
      if (!cell.ok) out.push_back(std::move(cell));
    }
  Verdict summary = Verdict::pass("chain/bijection", 0);
  if (!out.empty()) {
    summary.ok = false;
    summary.counterexample = {{"failing_cells", out.size()},
                              {"first", out.front().counterexample}};
  } else {
    std::uint64_t total = 0;
    (void)total;
  }
  // one verdict per failing cell plus a summary keeps the stream compact
  std::vector<Verdict> stream = std::move(out);
  stream.push_back(std::move(summary));
  return stream;
}

int cmd_check(const std::string& path, const std::string& suite, std::uint64_t seed,
              std::size_t samples, std::uint64_t chain_budget) {
  static const std::vector<std::string> known{"monad",       "strength", "distlaw",
                                              "adjunction",  "chain",    "interchange",
                                              "all"};
  if (std::find(known.begin(), known.end(), suite) == known.end())
    throw CLI::ValidationError("--suite", "unknown suite \"" + suite + "\"");
  if (samples > 1000000) throw CLI::ValidationError("--samples", "limit is 1000000");

  Signature sig = load_signature(path);
  CheckConfig cfg;
  cfg.seed = seed;
  cfg.samples = samples;
  cfg.max_height = std::min<std::size_t>(4, height_cap());
  AdjunctionOptions adj;
  adj.seed = seed;

  bool all_ok = true;
  auto want = [&](const char* name) { return suite == "all" || suite == name; };
  if (want("monad")) emit(check_monad_laws(sig, cfg), all_ok);
  if (want("strength")) emit(check_strength_laws(sig, cfg), all_ok);
  if (want("distlaw")) emit(check_dist_laws(sig, cfg), all_ok);
  if (want("adjunction")) emit(adjunction_suite(sig, adj), all_ok);
  if (want("chain")) emit(chain_suite(sig, std::min<std::size_t>(4, height_cap()), chain_budget), all_ok);
  if (want("interchange")) emit(check_interchange(sig, cfg), all_ok);
  return all_ok ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sortal: well-sorted syntax with certified substitution from "
               "multi-sorted binding signatures"};
  app.require_subcommand(1);

  std::string sig_path, context_text, sort_name, ctx_x, ctx_y, assign_path, term_path;
  std::string suite = "all";
  std::size_t max_height = 2;
  std::uint64_t seed = 0, chain_budget = 2000000;
  std::size_t samples = 1000;
  bool count_only = false;

  CLI::App* validate_cmd = app.add_subcommand("validate", "check a signature file");
  validate_cmd->add_option("sig-file", sig_path)->required();

  CLI::App* enum_cmd = app.add_subcommand("enumerate", "list well-sorted terms by height");
  enum_cmd->add_option("sig-file", sig_path)->required();
  enum_cmd->add_option("--context", context_text, "comma-separated sorts, index 0 first");
  enum_cmd->add_option("--sort", sort_name)->required();
  enum_cmd->add_option("--max-height", max_height);
  enum_cmd->add_flag("--count-only", count_only, "emit n,context,sort,count rows");

  CLI::App* subst_cmd = app.add_subcommand("subst", "apply a parallel substitution");
  subst_cmd->add_option("sig-file", sig_path)->required();
  subst_cmd->add_option("--context-x", ctx_x, "variables being substituted");
  subst_cmd->add_option("--context-y", ctx_y, "variables of the result");
  subst_cmd->add_option("--assign", assign_path, "JSON object: index -> term")->required();
  subst_cmd->add_option("--term", term_path, "s-expression over context-x ++ context-y")
      ->required();

  CLI::App* check_cmd = app.add_subcommand("check", "run law suites, verdicts as JSON lines");
  check_cmd->add_option("sig-file", sig_path)->required();
  check_cmd->add_option("--suite", suite,
                        "monad|strength|distlaw|adjunction|chain|interchange|all");
  check_cmd->add_option("--seed", seed);
  check_cmd->add_option("--samples", samples);
  check_cmd->add_option("--chain-budget", chain_budget, "per-cell materialization guard");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(validate_cmd)) return cmd_validate(sig_path);
    if (app.got_subcommand(enum_cmd))
      return cmd_enumerate(sig_path, context_text, sort_name, max_height, count_only);
    if (app.got_subcommand(subst_cmd))
      return cmd_subst(sig_path, ctx_x, ctx_y, assign_path, term_path);
    if (app.got_subcommand(check_cmd))
      return cmd_check(sig_path, suite, seed, samples, chain_budget);
  } catch (const InvalidSignature& e) {
    for (const Diagnostic& d : e.diagnostics) std::cerr << d.code << ": " << d.message << "\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
