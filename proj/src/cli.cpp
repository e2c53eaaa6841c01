#include "hsw/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "hsw/error.hpp"

namespace hsw::cli {

AvoidanceReport classify(const HighestWeight& lambda) {
  AvoidanceReport profile = profile_avoidance(lambda);
  if (!(profile == closed_form_avoidance(lambda)))
    throw CrossCheckFailure("closed-form and profile avoidance disagree for " + lambda.to_string());
  return profile;
}

SweepRow row_from_report(const AvoidanceReport& r) {
  SweepRow row;
  row.k1.assign(r.lambda.k1().begin(), r.lambda.k1().end());
  row.k2.assign(r.lambda.k2().begin(), r.lambda.k2().end());
  row.corank = r.corank;
  row.completely_irregular = r.completely_irregular;
  row.kostant_parallel = !r.presentations.empty();
  if (r.boundary_zero) row.beta = "ZERO";
  else if (auto b = r.beta()) row.beta = std::to_string(*b);
  else row.beta = "NONE";
  row.weights01_present = r.weights01_present;
  return row;
}

std::vector<HighestWeight> sweep_weights(const SweepSpec& spec) {
  if (spec.d < 1) throw Error(ErrorKind::EmptyEmbeddingSet, "d must be at least 1");
  if (spec.k_max < 0) throw Error(ErrorKind::InvalidArgument, "k-max must be non-negative");

  std::vector<std::pair<Int, Int>> pairs;
  for (Int a = 0; a <= spec.k_max; ++a)
    for (Int b = 0; b <= a; ++b) pairs.emplace_back(a, b);

  std::uint64_t count = 1;
  for (int s = 0; s < spec.d; ++s) {
    if (count > spec.cap / pairs.size())
      throw Error(ErrorKind::SizeLimit, "sweep would exceed the cap of " + std::to_string(spec.cap) + " weights");
    count *= pairs.size();
  }

  std::vector<std::pair<std::vector<Int>, std::vector<Int>>> keys;
  keys.reserve(count);
  std::vector<std::size_t> idx(static_cast<std::size_t>(spec.d), 0);
  for (std::uint64_t i = 0; i < count; ++i) {
    std::vector<Int> k1, k2;
    for (auto j : idx) {
      k1.push_back(pairs[j].first);
      k2.push_back(pairs[j].second);
    }
    keys.emplace_back(std::move(k1), std::move(k2));
    for (int s = spec.d - 1; s >= 0; --s) {
      auto& j = idx[static_cast<std::size_t>(s)];
      if (++j < pairs.size()) break;
      j = 0;
    }
  }
  std::sort(keys.begin(), keys.end());

  std::vector<HighestWeight> out;
  out.reserve(keys.size());
  for (auto& [k1, k2] : keys) out.push_back(make_weight(std::move(k1), std::move(k2)));
  return out;
}

std::vector<SweepRow> sweep(const SweepSpec& spec) {
  const auto weights = sweep_weights(spec);
  std::vector<SweepRow> rows(weights.size());
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(spec.workers, weights.size()));
  const std::size_t chunk = (weights.size() + workers - 1) / workers;

  std::vector<std::string> failures(workers);
  auto work = [&](std::size_t t) {
    try {
      for (std::size_t i = t * chunk; i < std::min(weights.size(), (t + 1) * chunk); ++i)
        rows[i] = row_from_report(classify(weights[i]));
    } catch (const std::exception& e) {
      failures[t] = e.what();
    }
  };
  std::vector<std::thread> threads;
  for (std::size_t t = 1; t < workers; ++t) threads.emplace_back(work, t);
  work(0);
  for (auto& th : threads) th.join();

  for (const auto& f : failures)
    if (!f.empty()) throw CrossCheckFailure(f);
  return rows;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string json_list(const std::vector<Int>& v) { return Json(v).dump(); }

const char* boolstr(bool b) { return b ? "true" : "false"; }

Json beta_json(const std::string& beta) {
  if (beta == "ZERO" || beta == "NONE") return beta;
  return std::stoll(beta);
}

}  // namespace

std::string to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "k1,k2,corank,completelyIrregular,kostantParallel,beta,weights01Present\r\n";
  for (const auto& r : rows) {
    os << csv_field(json_list(r.k1)) << ',' << csv_field(json_list(r.k2)) << ',' << r.corank << ','
       << boolstr(r.completely_irregular) << ',' << boolstr(r.kostant_parallel) << ',' << csv_field(r.beta) << ','
       << boolstr(r.weights01_present) << "\r\n";
  }
  return os.str();
}

Json to_json(const std::vector<SweepRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back(Json{{"k1", r.k1},
                       {"k2", r.k2},
                       {"corank", r.corank},
                       {"completelyIrregular", r.completely_irregular},
                       {"kostantParallel", r.kostant_parallel},
                       {"beta", beta_json(r.beta)},
                       {"weights01Present", r.weights01_present}});
  }
  return out;
}

namespace {

HighestWeight load_weight(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return parse_weight(arg);
  std::ifstream in(arg);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read weight file '" + arg + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_weight(buf.str());
}

Stratum parse_stratum(const std::string& s) {
  if (s == "siegel") return Stratum::Siegel;
  if (s == "klingen") return Stratum::Klingen;
  throw Error(ErrorKind::InvalidArgument, "stratum must be siegel or klingen, got '" + s + "'");
}

Json kostant_dump(const HighestWeight& lambda, Stratum m) {
  Json degrees = Json::array();
  for (int q = 0; q <= 3 * lambda.d(); ++q) {
    Json summands = Json::array();
    for (const auto& psi : decompositions(lambda.d(), q)) {
      const auto levi = levi_weight(lambda, psi, m);
      const auto kappa = parallel_condition(lambda, psi, m);
      summands.push_back(Json{{"psi", to_json(psi)},
                              {"levi", Json{{"e1", levi.coords.e1}, {"e2", levi.coords.e2}, {"c", levi.coords.c}}},
                              {"hodgeWeight", levi.hodge_weight},
                              {"kappa", kappa ? Json(*kappa) : Json(nullptr)}});
    }
    degrees.push_back(Json{{"q", q}, {"summands", summands}});
  }
  return Json{{"lambda", to_json(lambda)}, {"stratum", to_string(m)}, {"degrees", degrees}};
}

Json profile_dump(const HighestWeight& lambda, const std::string& stratum) {
  if (stratum == "siegel") return to_json(siegel_profile(lambda));
  if (stratum == "klingen") return to_json(klingen_profile(lambda));
  if (stratum == "cusp") return to_json(hb_cusp_profile(cusp_restriction(lambda), lambda.d()));
  if (stratum == "double") return to_json(double_degeneration_profile(lambda));
  if (!stratum.empty())
    throw Error(ErrorKind::InvalidArgument, "stratum must be siegel, klingen, cusp or double, got '" + stratum + "'");
  return Json{{"lambda", to_json(lambda)},
              {"siegel", to_json(siegel_profile(lambda))},
              {"klingen", to_json(klingen_profile(lambda))},
              {"cusp", to_json(hb_cusp_profile(cusp_restriction(lambda), lambda.d()))},
              {"double", to_json(double_degeneration_profile(lambda))},
              {"perverseBounds", Json::array({to_json(perverse_bounds(lambda, Stratum::Siegel)),
                                              to_json(perverse_bounds(lambda, Stratum::Klingen))})}};
}

Json weyl_dump(int d, Stratum m) {
  Json elems = Json::array();
  for (const auto& w : kostant_set(d, m)) elems.push_back(to_json(w));
  return Json{{"d", d}, {"stratum", to_string(m)}, {"elements", elems}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boundary weights of genus-2 Hilbert-Siegel local systems", "hsw"};
  app.require_subcommand(1);

  std::string lambda_arg, stratum, format = "json";
  int d = 1;
  Int k_max = 0;
  std::uint64_t cap = kDefaultSweepCap;
  unsigned workers = std::max(1U, std::thread::hardware_concurrency());

  auto* classify_cmd = app.add_subcommand("classify", "Avoidance report for one weight");
  classify_cmd->add_option("--lambda", lambda_arg, "Weight as JSON or a path to a JSON file")->required();

  auto* profile_cmd = app.add_subcommand("profile", "Degeneration profiles for one weight");
  profile_cmd->add_option("--lambda", lambda_arg, "Weight as JSON or a path to a JSON file")->required();
  profile_cmd->add_option("--stratum", stratum, "siegel, klingen, cusp or double (default: all)");

  auto* kostant_cmd = app.add_subcommand("kostant", "Kostant summands of one weight along a stratum");
  kostant_cmd->add_option("--lambda", lambda_arg, "Weight as JSON or a path to a JSON file")->required();
  kostant_cmd->add_option("--stratum", stratum, "siegel or klingen")->required();

  auto* weyl_cmd = app.add_subcommand("weyl-dump", "Kostant representatives with dot-action tables");
  weyl_cmd->add_option("--d", d, "Number of embeddings")->required();
  weyl_cmd->add_option("--stratum", stratum, "siegel or klingen")->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "Classify every dominant weight up to a bound");
  sweep_cmd->add_option("--d", d, "Number of embeddings")->required();
  sweep_cmd->add_option("--k-max", k_max, "Bound on the entries of k1 and k2")->required();
  sweep_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sweep_cmd->add_option("--cap", cap, "Maximum number of weights");
  sweep_cmd->add_option("--workers", workers, "Worker threads");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.get_name() << ": " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (*classify_cmd) {
      out << to_json(classify(load_weight(lambda_arg))).dump(2) << "\n";
    } else if (*profile_cmd) {
      out << profile_dump(load_weight(lambda_arg), stratum).dump(2) << "\n";
    } else if (*kostant_cmd) {
      out << kostant_dump(load_weight(lambda_arg), parse_stratum(stratum)).dump(2) << "\n";
    } else if (*weyl_cmd) {
      out << weyl_dump(d, parse_stratum(stratum)).dump(2) << "\n";
    } else if (*sweep_cmd) {
      const auto rows = sweep({d, k_max, cap, workers});
      if (format == "csv") out << to_csv(rows);
      else out << to_json(rows).dump(2) << "\n";
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CrossCheckFailure& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace hsw::cli
