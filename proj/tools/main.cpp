// Command-line front end: cobordism algebra, matrix images, theory checks.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "onecob/brauer.hpp"
#include "onecob/cobordism.hpp"
#include "onecob/errors.hpp"
#include "onecob/generator_word.hpp"
#include "onecob/io.hpp"
#include "onecob/tqft.hpp"

namespace {

using namespace onecob;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Cobordism load_cobordism(const std::string& path) {
  return io::parse_cobordism(read_file(path));
}

ExactMatrix load_matrix(const std::string& path) {
  const std::string text = read_file(path);
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
    return io::parse_matrix_json(text);
  }
  return io::parse_matrix_csv(text);
}

void print_matrix(const ExactMatrix& m, const std::string& format) {
  if (format == "json") {
    std::cout << io::serialize_matrix_json(m) << "\n";
  } else {
    std::cout << io::serialize_matrix_csv(m);
  }
}

std::vector<SignedObject> objects_up_to(std::size_t max_points) {
  std::vector<SignedObject> out;
  for (std::size_t len = 0; len <= max_points; ++len) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
      std::string s(len, '+');
      for (std::size_t i = 0; i < len; ++i) {
        if ((mask >> i) & 1) s[i] = '-';
      }
      out.emplace_back(s);
    }
  }
  return out;
}

SignedObject random_object(std::mt19937_64& rng, std::size_t max_len) {
  const std::size_t len = rng() % (max_len + 1);
  std::vector<int> signs(len);
  for (auto& s : signs) s = (rng() % 2) ? 1 : -1;
  return SignedObject::from_signs(signs);
}

int finish_report(const VerifyReport& report) {
  std::cout << io::serialize_report(report) << "\n";
  return report.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"oriented 1-dimensional cobordisms, their exact matrix images, and strict theories built from an invertible matrix"};
  app.require_subcommand(1);
  int exit_code = 0;

  // ---- cobordism algebra ----------------------------------------------
  std::string path_a, path_b;
  auto* cmd_compose = app.add_subcommand("compose", "glue two cobordisms (target of the first to source of the second) and print the result");
  cmd_compose->add_option("first", path_a, "cobordism JSON file")->required();
  cmd_compose->add_option("second", path_b, "cobordism JSON file")->required();
  cmd_compose->callback([&] {
    std::cout << io::serialize_cobordism(compose(load_cobordism(path_a), load_cobordism(path_b)))
              << "\n";
  });

  auto* cmd_tensor = app.add_subcommand("tensor", "place two cobordisms side by side and print the result");
  cmd_tensor->add_option("first", path_a, "cobordism JSON file")->required();
  cmd_tensor->add_option("second", path_b, "cobordism JSON file")->required();
  cmd_tensor->callback([&] {
    std::cout << io::serialize_cobordism(tensor(load_cobordism(path_a), load_cobordism(path_b)))
              << "\n";
  });

  std::string path_k;
  auto* cmd_decompose = app.add_subcommand("decompose", "print the canonical layered word of a cobordism");
  cmd_decompose->add_option("cobordism", path_k, "cobordism JSON file")->required();
  cmd_decompose->callback([&] {
    std::cout << io::serialize_word(decompose(load_cobordism(path_k))) << "\n";
  });

  std::string path_w;
  auto* cmd_recompose = app.add_subcommand("recompose", "evaluate a layered word back to a cobordism");
  cmd_recompose->add_option("word", path_w, "word JSON file")->required();
  cmd_recompose->callback([&] {
    std::cout << io::serialize_cobordism(recompose(io::parse_word(read_file(path_w)))) << "\n";
  });

  // ---- matrix image ----------------------------------------------------
  unsigned p = 0;
  std::string format = "csv";
  std::uint64_t max_cells = kDefaultMaxCells;
  auto* cmd_brauer = app.add_subcommand("brauer", "print the exact matrix image of a cobordism");
  cmd_brauer->add_option("cobordism", path_k, "cobordism JSON file")->required();
  cmd_brauer->add_option("--p", p, "color count (at least 2)")->required();
  cmd_brauer->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_brauer->add_option("--max-cells", max_cells, "cap on materialized matrix cells");
  cmd_brauer->callback([&] {
    print_matrix(brauer_image(load_cobordism(path_k), p, max_cells), format);
  });

  // ---- theories --------------------------------------------------------
  std::string path_x;
  auto* cmd_eval = app.add_subcommand("tqft-eval", "evaluate a cobordism in the theory built from an invertible matrix");
  cmd_eval->add_option("cobordism", path_k, "cobordism JSON file")->required();
  cmd_eval->add_option("--x", path_x, "invertible matrix (CSV, or JSON if the name ends in .json)")->required();
  cmd_eval->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd_eval->add_option("--max-cells", max_cells, "cap on materialized matrix cells");
  cmd_eval->callback([&] {
    const StrictTqft t(load_matrix(path_x));
    print_matrix(tqft_eval(t, load_cobordism(path_k), max_cells), format);
  });

  auto* cmd_check = app.add_subcommand("tqft-check", "verify the defining identities (snakes, circle value, swap relations) of the theory built from a matrix");
  cmd_check->add_option("--x", path_x, "invertible matrix (CSV, or JSON if the name ends in .json)")->required();
  cmd_check->callback([&] {
    const StrictTqft t(load_matrix(path_x));
    exit_code = finish_report(check_axioms(t));
  });

  // ---- verification sweeps ----------------------------------------------
  auto* cmd_verify = app.add_subcommand("verify", "run a verification sweep and print a JSON report (exit 0 iff everything passed)");
  cmd_verify->require_subcommand(1);

  struct VerifyOpts {
    unsigned p = 0;
    std::size_t max_points = 3;
    std::uint32_t max_circles = 1;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t max_cells = kDefaultMaxCells;
  };
  VerifyOpts fun_opts{};
  VerifyOpts faith_opts{.max_points = 8, .max_circles = 2};
  VerifyOpts theta_opts{.max_points = 6, .max_circles = 2, .trials = 100};

  auto add_common = [](CLI::App* cmd, VerifyOpts& o, const char* points_help) {
    cmd->add_option("--p", o.p, "color count (at least 2)")->required();
    cmd->add_option("--max-points", o.max_points, points_help);
    cmd->add_option("--max-circles", o.max_circles, "largest circle count per morphism");
    cmd->add_option("--max-cells", o.max_cells, "cap on materialized matrix cells");
  };

  auto* v_fun = cmd_verify->add_subcommand("functoriality", "composition, tensoring, identities, and the block swap, over whole hom-sets or sampled pairs");
  add_common(v_fun, fun_opts, "largest object length (exhaustive over all sign sequences up to this length; default 3)");
  auto* fun_trials = v_fun->add_option("--trials", fun_opts.trials, "sample this many random triples instead of sweeping everything");
  auto* fun_seed = v_fun->add_option("--seed", fun_opts.seed, "random seed (required with --trials)");
  fun_trials->needs(fun_seed);
  fun_seed->needs(fun_trials);
  v_fun->callback([&] {
    const VerifyOpts& o = fun_opts;
    VerifyReport total;
    if (o.trials == 0) {
      const auto objs = objects_up_to(o.max_points);
      for (const auto& a : objs) {
        for (const auto& b : objs) {
          for (const auto& c : objs) {
            total.merge(verify_functoriality(o.p, a, b, c, ExhaustiveMode{}, o.max_circles,
                                             o.max_cells));
          }
        }
      }
    } else {
      std::mt19937_64 rng(o.seed);
      for (std::uint64_t t = 0; t < o.trials; ++t) {
        total.merge(verify_functoriality(o.p, random_object(rng, o.max_points),
                                         random_object(rng, o.max_points),
                                         random_object(rng, o.max_points),
                                         RandomMode{1, rng()}, o.max_circles, o.max_cells));
      }
    }
    exit_code = finish_report(total);
  });

  auto* v_faith = cmd_verify->add_subcommand("faithfulness", "distinct morphisms get distinct matrix images, across every hom-set in range");
  add_common(v_faith, faith_opts, "largest combined boundary size |a|+|b| (default 8)");
  v_faith->callback([&] {
    const VerifyOpts& o = faith_opts;
    VerifyReport total;
    const auto objs = objects_up_to(o.max_points);
    for (const auto& a : objs) {
      for (const auto& b : objs) {
        if (a.size() + b.size() > o.max_points) continue;
        total.merge(verify_faithfulness(o.p, a, b, o.max_circles, o.max_cells));
      }
    }
    exit_code = finish_report(total);
  });

  auto* v_theta = cmd_verify->add_subcommand("theta", "layered evaluation agrees with conjugating the matrix image by the natural isomorphism");
  add_common(v_theta, theta_opts, "largest combined boundary size |a|+|b| for sampled morphisms (default 6)");
  auto* th_trials = v_theta->add_option("--trials", theta_opts.trials, "number of random morphisms (default 100)");
  auto* th_seed = v_theta->add_option("--seed", theta_opts.seed, "random seed (required with --trials)");
  th_trials->needs(th_seed);
  v_theta->callback([&] {
    const VerifyOpts& o = theta_opts;
    exit_code = finish_report(verify_theta(o.p, o.max_points, o.max_circles, o.trials, o.seed,
                                           o.max_cells));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
