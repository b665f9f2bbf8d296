// Command-line surface. Every subcommand streams one JSON object per line
// on stdout with all numbers rendered as decimal strings; errors go to
// stderr as JSON objects and flip the exit code.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "fermat/fermat_chain.hpp"
#include "fermat/quartic_chain.hpp"
#include "fermat/triples.hpp"

using ordered_json = nlohmann::ordered_json;

namespace {

using namespace fermat;

void emit(const ordered_json& record) {
  std::cout << record.dump() << std::endl;
}

int fail(const std::string& code, const std::string& detail,
         int exit_code = 1) {
  std::cerr << ordered_json{{"error", code}, {"detail", detail}}.dump()
            << std::endl;
  return exit_code;
}

void warn(const std::string& code, const std::string& detail) {
  std::cerr << ordered_json{{"warning", code}, {"detail", detail}}.dump()
            << std::endl;
}

int cmd_pell(unsigned count) {
  for (unsigned k = 1; k <= count; ++k) {
    PellPair p = pell_pair(k);
    emit({{"kind", "pell"},
          {"meta", {{"command", "pell"}, {"index", std::to_string(k)}}},
          {"payload", {{"u", to_decimal(p.u)}, {"v", to_decimal(p.v)}}}});
  }
  return 0;
}

int cmd_family(const std::string& kind, unsigned count) {
  for (unsigned i = 1; i <= count; ++i) {
    FamilyRow row =
        kind == "sum-square" ? sum_square_family(i) : hyp_square_family(i);
    emit({{"kind", "family_row"},
          {"meta",
           {{"command", "family"},
            {"family", kind},
            {"index", std::to_string(i)}}},
          {"payload",
           {{"u", to_decimal(row.pell.u)},
            {"v", to_decimal(row.pell.v)},
            {"x", to_decimal(row.x)},
            {"y", to_decimal(row.y)},
            {"z", to_decimal(row.z)},
            {"square_value", to_decimal(row.square_value)}}}});
  }
  return 0;
}

unsigned seed_index(const ordered_json& doc, unsigned fallback) {
  if (doc.contains("meta") && doc["meta"].contains("index")) {
    return static_cast<unsigned>(
        std::stoul(doc["meta"]["index"].get<std::string>()));
  }
  return fallback;
}

ordered_json load_record(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open seed file " + path);
  }
  return ordered_json::parse(in);
}

FermatSolution load_fermat_seed(const std::string& path) {
  ordered_json doc = load_record(path);
  if (doc.at("kind") != "fermat_solution") {
    throw std::invalid_argument(
        "seed file for the fermat method must hold a fermat_solution record");
  }
  const ordered_json& payload = doc.at("payload");
  SignedTriple raw{parse_decimal(payload.at("x").get<std::string>()),
                   parse_decimal(payload.at("y").get<std::string>()),
                   parse_decimal(payload.at("z").get<std::string>())};
  FermatSolution seed = reduce_and_classify(raw, seed_index(doc, 0));
  if (payload.contains("e") &&
      parse_decimal(payload["e"].get<std::string>()) != seed.e) {
    throw std::invalid_argument("seed file e does not match its triple");
  }
  if (payload.contains("f") &&
      parse_decimal(payload["f"].get<std::string>()) != seed.f) {
    throw std::invalid_argument("seed file f does not match its triple");
  }
  verify_solution(seed);
  return seed;
}

ordered_json fermat_record(const ChainStep& step, const char* branch) {
  const FermatSolution& s = step.solution;
  return {{"kind", "fermat_solution"},
          {"meta",
           {{"command", "chain"},
            {"method", "fermat"},
            {"branch", branch},
            {"index", std::to_string(s.chain_index)},
            {"classification", to_string(s.classification)}}},
          {"payload",
           {{"x", to_decimal(s.x)},
            {"y", to_decimal(s.y)},
            {"z", to_decimal(s.z)},
            {"e", to_decimal(s.e)},
            {"f", to_decimal(s.f)},
            {"lambda", to_decimal(step.lambda)},
            {"t", to_fraction(step.t)}}}};
}

int run_fermat_chain(unsigned steps, ChainBranch branch,
                     const std::string& seed_file) {
  FermatSolution seed =
      seed_file.empty() ? fermat_seed() : load_fermat_seed(seed_file);
  ChainRun run = run_chain(seed, steps, {branch});
  for (const ChainStep& step : run.steps) {
    emit(fermat_record(step, to_string(branch)));
    if (!step.arm_condition) {
      warn("negative_arm",
           "t + m <= n at step " + std::to_string(step.solution.chain_index) +
               "; the solution keeps a negative arm");
    }
  }
  if (run.error) {
    return fail("chain_broken", *run.error);
  }
  return 0;
}

int run_quartic_chain(unsigned steps, const std::string& seed_file) {
  QuarticRun run;
  if (seed_file.empty()) {
    run = run_quartic(steps);
  } else {
    ordered_json doc = load_record(seed_file);
    if (doc.at("kind") != "quartic_state") {
      throw std::invalid_argument(
          "seed file for the quartic method must hold a quartic_state record");
    }
    const ordered_json& payload = doc.at("payload");
    run = run_quartic_from(parse_decimal(payload.at("r").get<std::string>()),
                           parse_decimal(payload.at("s").get<std::string>()),
                           steps, seed_index(doc, 1));
  }
  for (const QuarticState& st : run.states) {
    StateRoots roots = verify_state(st);
    emit({{"kind", "quartic_state"},
          {"meta",
           {{"command", "chain"},
            {"method", "quartic"},
            {"index", std::to_string(st.k)}}},
          {"payload",
           {{"r", to_decimal(st.r)},
            {"s", to_decimal(st.s)},
            {"t", to_fraction(st.t)},
            {"p", to_decimal(st.p)},
            {"q", to_decimal(st.q)},
            {"x", to_decimal(st.x)},
            {"y", to_decimal(st.y)},
            {"z", to_decimal(st.z)},
            {"e", to_decimal(roots.e)},
            {"f", to_decimal(roots.f)}}}});
    if (!(st.t > 1)) {
      warn("t_at_most_one",
           "t = " + to_fraction(st.t) + " at state " + std::to_string(st.k));
    }
  }
  if (run.error) {
    return fail("chain_broken", *run.error);
  }
  return 0;
}

int cmd_verify(const std::string& xs, const std::string& ys,
               const std::string& zs) {
  Integer x = parse_decimal(xs);
  Integer y = parse_decimal(ys);
  Integer z = parse_decimal(zs);
  const bool pythagorean = x * x + y * y == z * z;
  Integer sum = x + y;
  bool z_is_square = false;
  bool sum_is_square = false;
  Integer e, f;
  if (sgn(z) >= 0) {
    IsqrtResult r = isqrt(z);
    z_is_square = r.exact;
    e = r.root;
  }
  if (sgn(sum) >= 0) {
    IsqrtResult r = isqrt(sum);
    sum_is_square = r.exact;
    f = r.root;
  }
  const bool coprime = gcd(x, y) == 1;

  ordered_json meta{{"command", "verify"}, {"index", "1"}};
  if (pythagorean && z_is_square && sum_is_square && coprime) {
    Classification cls;
    if (sgn(x) > 0 && sgn(y) > 0) {
      cls = Classification::positive_primitive;
    } else if (sgn(x) == 0 || sgn(y) == 0) {
      cls = Classification::trivial;
    } else {
      cls = Classification::negative_primitive;
    }
    meta["classification"] = to_string(cls);
  }
  ordered_json payload{{"pythagorean", pythagorean},
                       {"z_is_square", z_is_square},
                       {"sum_is_square", sum_is_square},
                       {"coprime", coprime}};
  if (z_is_square) payload["e"] = to_decimal(e);
  if (sum_is_square) payload["f"] = to_decimal(f);
  emit({{"kind", "verify_report"}, {"meta", meta}, {"payload", payload}});
  return 0;
}

CLI::Validator positive_integer() {
  return CLI::Validator(
      [](std::string& input) -> std::string {
        if (input.empty() ||
            input.find_first_not_of("0123456789") != std::string::npos) {
          return "must be a positive integer, got '" + input + "'";
        }
        if (input.find_first_not_of('0') == std::string::npos) {
          return "must be >= 1";
        }
        return std::string{};
      },
      "UINT>=1");
}

int cmd_brute(std::uint64_t bound) {
  std::vector<W4Solution> found = brute_force_w4(bound);
  unsigned index = 0;
  for (const W4Solution& sol : found) {
    emit({{"kind", "brute_result"},
          {"meta", {{"command", "brute"}, {"index", std::to_string(++index)}}},
          {"payload",
           {{"x", std::to_string(sol.x)}, {"w", std::to_string(sol.w)}}}});
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact constructor and verifier for right triangles whose hypotenuse "
      "and arm sum are perfect squares (x^2 + y^2 = z^2 = e^4, x + y = f^2)"};
  app.require_subcommand(1);

  unsigned count = 0;
  CLI::App* pell = app.add_subcommand("pell", "Solutions of u^2 - 2v^2 = -+1");
  pell->add_option("--count", count, "How many index-ordered pairs to print")
      ->required()
      ->check(positive_integer());

  std::string family_kind;
  unsigned family_count = 0;
  CLI::App* family = app.add_subcommand(
      "family", "One-parameter triangle families with a square arm sum or "
                "square hypotenuse");
  family->add_option("--kind", family_kind, "sum-square or hyp-square")
      ->required()
      ->check(CLI::IsMember({"sum-square", "hyp-square"}));
  family->add_option("--count", family_count, "How many rows to print")
      ->required()
      ->check(positive_integer());

  std::string method;
  std::string branch_name = "t1";
  unsigned steps = 0;
  std::string seed_file;
  bool long_ok = false;
  CLI::App* chain = app.add_subcommand(
      "chain", "Generate successive solutions of the square-square system");
  chain->add_option("--method", method, "fermat (closed-form branches) or "
                                        "quartic (square completion)")
      ->required()
      ->check(CLI::IsMember({"fermat", "quartic"}));
  chain->add_option("--steps", steps, "How many solutions / states to emit")
      ->required()
      ->check(positive_integer());
  CLI::Option* branch_opt =
      chain->add_option("--branch", branch_name, "Closed-form branch, fermat "
                                                 "method only (default t1)")
          ->check(CLI::IsMember({"t1", "t2"}));
  chain->add_option("--seed-file", seed_file,
                    "Resume from a previously emitted record")
      ->check(CLI::ExistingFile);
  chain->add_flag("--long-ok", long_ok,
                  "Allow runs past the printed record (fermat steps >= 3, "
                  "quartic steps >= 4)");

  std::string vx, vy, vz;
  CLI::App* verify = app.add_subcommand("verify", "Check one triple");
  verify->add_option("--x", vx)->required();
  verify->add_option("--y", vy)->required();
  verify->add_option("--z", vz)->required();

  std::uint64_t bound = 0;
  CLI::App* brute = app.add_subcommand(
      "brute", "Exhaustive search for x^2 + (x+1)^2 = w^4");
  brute->add_option("--bound", bound, "Inclusive upper limit for x")
      ->required()
      ->check(positive_integer());

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help
    }
    return fail("usage", e.what(), e.get_exit_code());
  }

  try {
    if (*pell) return cmd_pell(count);
    if (*family) return cmd_family(family_kind, family_count);
    if (*chain) {
      if (method == "fermat") {
        if (steps >= 3 && !long_ok) {
          return fail("usage",
                      "fermat chains with 3 or more steps grow far past the "
                      "printed record; pass --long-ok to run anyway",
                      2);
        }
        ChainBranch branch =
            branch_name == "t2" ? ChainBranch::t2 : ChainBranch::t1;
        return run_fermat_chain(steps, branch, seed_file);
      }
      if (branch_opt->count() > 0) {
        return fail("usage", "--branch applies to the fermat method only", 2);
      }
      if (steps >= 4 && !long_ok) {
        return fail("usage",
                    "quartic chains with 4 or more states grow far past the "
                    "printed record; pass --long-ok to run anyway",
                    2);
      }
      return run_quartic_chain(steps, seed_file);
    }
    if (*verify) return cmd_verify(vx, vy, vz);
    if (*brute) return cmd_brute(bound);
  } catch (const NotASquare& e) {
    return fail("not_a_square", e.what());
  } catch (const DegenerateSystem& e) {
    return fail("degenerate_system", e.what());
  } catch (const NonPositiveSum& e) {
    return fail("non_positive_sum", e.what());
  } catch (const InvalidGenerator& e) {
    return fail("invalid_generator", e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail("usage", e.what(), 2);
  } catch (const std::invalid_argument& e) {
    return fail("usage", e.what(), 2);
  } catch (const std::exception& e) {
    return fail("error", e.what());
  }
  return 0;
}
