#include "qfl/cli/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "qfl/catalog/catalog.hpp"
#include "qfl/cohomology/cohomology.hpp"
#include "qfl/deform/deform.hpp"
#include "qfl/derivations/derivations.hpp"
#include "qfl/errors.hpp"
#include "qfl/liecore/invariants.hpp"
#include "qfl/liecore/json_io.hpp"

namespace qfl::cli {

using nlohmann::json;
using liecore::LieAlgebra;

namespace {

struct Result {
  json report;
  int code = kOk;
};

struct Input {
  std::string name;
  LieAlgebra algebra;
  std::optional<catalog::FamilySpec> spec;
  std::vector<std::string> notes;
};

Input load_input(const std::string& source) {
  Input in;
  if (std::filesystem::is_regular_file(source)) {
    in.name = source;
    in.algebra = liecore::load_algebra_file(source);
    return in;
  }
  in.spec = catalog::parse_spec(source);
  in.name = in.spec->to_string();
  auto built = catalog::build_family_detailed(*in.spec);
  in.algebra = std::move(built.algebra);
  in.notes = std::move(built.notes);
  return in;
}

json defects_json(const std::vector<liecore::JacobiDefect>& defects) {
  json out = json::array();
  for (const auto& d : defects) out.push_back({{"triple", {d.i, d.j, d.k}}, {"defect", liecore::vector_to_json(d.defect)}});
  return out;
}

// Shared head of every report; returns false (and fills the failure) when
// the bracket table is not a Lie algebra.
bool lie_or_fail(const Input& in, Result& res) {
  res.report = {{"input", in.name}, {"dim", in.algebra.dim()}};
  if (!in.notes.empty()) res.report["notes"] = in.notes;
  const auto defects = liecore::jacobi_defect(in.algebra);
  res.report["jacobi"] = defects.empty();
  if (defects.empty()) return true;
  res.report["defects"] = defects_json(defects);
  res.code = kMathFailure;
  return false;
}

Result do_build(const Input& in) {
  Result res;
  const bool ok = lie_or_fail(in, res);
  res.report["algebra"] = liecore::to_json(in.algebra);
  (void)ok;
  return res;
}

Result do_invariants(const Input& in) {
  Result res;
  if (!lie_or_fail(in, res)) return res;
  const auto& g = in.algebra;
  const auto lcs = liecore::lower_central_series(g);
  res.report["nilindex"] = lcs.nilindex ? json(*lcs.nilindex) : json(nullptr);
  if (lcs.nilindex) res.report["psequence"] = liecore::psequence(lcs);
  res.report["center_dim"] = liecore::center(g).dim();
  res.report["type"] = liecore::type_of(g);
  res.report["rank"] = derivations::diagonal_derivation_space(g).rank();
  return res;
}

Result do_derivations(const Input& in) {
  Result res;
  if (!lie_or_fail(in, res)) return res;
  const auto& g = in.algebra;
  const auto diag = derivations::diagonal_derivation_space(g);
  res.report["der_dim"] = derivations::derivation_space(g).dim();
  res.report["inner_dim"] = derivations::inner_derivations(g).dim();
  res.report["diagonal_rank"] = diag.rank();
  json weights = json::array();
  for (const auto& w : diag.weights) weights.push_back(liecore::vector_to_json(w));
  res.report["weights"] = weights;
  return res;
}

Result do_cohomology(const Input& in) {
  Result res;
  if (!lie_or_fail(in, res)) return res;
  res.report.update(cohomology::to_json(cohomology::cohomology_report(in.algebra, in.name)));
  return res;
}

Result do_completable(const Input& in) {
  Result res;
  if (!in.spec) {
    throw InputError("completable needs a family spec (the printed torus comes with the family)");
  }
  const auto rep = catalog::completability_report(*in.spec);
  res.report = catalog::to_json(rep);
  res.report["input"] = in.name;
  res.code = rep.jacobi_ok && rep.complete ? kOk : kMathFailure;
  return res;
}

// A family spec is completed with its torus; a JSON algebra is tested as is.
Result do_complete(const Input& in) {
  if (in.spec) return do_completable(in);
  Result res;
  if (!lie_or_fail(in, res)) return res;
  const auto c = derivations::is_complete(in.algebra);
  res.report["center_dim"] = c.center_dim;
  res.report["der_dim"] = c.der_dim;
  res.report["inner_dim"] = c.inner_dim;
  res.report["H0"] = c.center_dim;
  res.report["H1"] = c.der_dim - c.inner_dim;
  res.report["complete"] = c.complete;
  res.code = c.complete ? kOk : kMathFailure;
  return res;
}

Result dispatch(const std::string& verb, const std::string& source) {
  const Input in = load_input(source);
  if (verb == "build") return do_build(in);
  if (verb == "invariants") return do_invariants(in);
  if (verb == "derivations") return do_derivations(in);
  if (verb == "cohomology") return do_cohomology(in);
  if (verb == "complete") return do_complete(in);
  if (verb == "completable") return do_completable(in);
  throw InputError("unknown verb '" + verb + "'");
}

std::size_t parse_count(const std::string& token, const std::string& key) {
  const std::string prefix = key + "=";
  if (token.rfind(prefix, 0) != 0) throw InputError("expected " + prefix + "<count>, got '" + token + "'");
  const std::string v = token.substr(prefix.size());
  if (v.empty() || !std::all_of(v.begin(), v.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw InputError("field '" + key + "' is not a count: '" + v + "'");
  }
  return std::stoul(v);
}

Result do_h2bound(const std::vector<std::string>& words) {
  std::size_t n = 0, k = 0;
  bool have_n = false, have_k = false;
  for (const auto& w : words) {
    std::istringstream split(w);
    std::string tok;
    while (split >> tok) {
      if (tok.rfind("n=", 0) == 0) {
        n = parse_count(tok, "n");
        have_n = true;
      } else if (tok.rfind("k=", 0) == 0) {
        k = parse_count(tok, "k");
        have_k = true;
      } else {
        throw InputError("h2bound: unexpected argument '" + tok + "'");
      }
    }
  }
  if (!have_n || !have_k) throw InputError("h2bound needs n=<count> k=<count>");
  const auto b = deform::h2_bound_check(n, k);
  return {deform::to_json(b), b.holds() ? kOk : kMathFailure};
}

// Human-readable rendering: one "key  value" line per scalar field; nested
// values are printed as compact JSON.
void print_table(std::ostream& os, const json& report) {
  std::size_t width = 0;
  for (auto it = report.begin(); it != report.end(); ++it) width = std::max(width, it.key().size());
  for (auto it = report.begin(); it != report.end(); ++it) {
    os << std::left << std::setw(static_cast<int>(width + 2)) << it.key();
    if (it->is_string()) {
      os << it->get<std::string>();
    } else {
      os << it->dump();
    }
    os << '\n';
  }
}

const std::vector<std::string> kColumns{"spec", "input", "jacobi", "nilindex", "type", "rank", "torus_rank", "H0", "H1", "complete"};

void print_batch_table(std::ostream& os, std::vector<json> rows) {
  auto key = [](const json& r) {
    if (r.contains("spec")) return r["spec"].get<std::string>();
    if (r.contains("input")) return r["input"].get<std::string>();
    return std::string();
  };
  std::stable_sort(rows.begin(), rows.end(), [&](const json& a, const json& b) { return key(a) < key(b); });
  std::vector<std::string> cols;
  for (const auto& c : kColumns) {
    if (c == "input" && std::any_of(rows.begin(), rows.end(), [](const json& r) { return r.contains("spec"); })) continue;
    if (std::any_of(rows.begin(), rows.end(), [&](const json& r) { return r.contains(c); })) cols.push_back(c);
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> widths;
  for (const auto& c : cols) widths.push_back(c.size());
  for (const auto& r : rows) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      std::string s = "-";
      if (r.contains(cols[i])) s = r[cols[i]].is_string() ? r[cols[i]].get<std::string>() : r[cols[i]].dump();
      widths[i] = std::max(widths[i], s.size());
      line.push_back(s);
    }
    cells.push_back(line);
  }
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      os << std::left << std::setw(static_cast<int>(widths[i] + (i + 1 < line.size() ? 2 : 0))) << line[i];
    }
    os << '\n';
  };
  emit(cols);
  for (const auto& line : cells) emit(line);
}

std::vector<std::string> read_batch_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open batch file '" + path + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(f, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto e = line.find_last_not_of(" \t\r");
    lines.push_back(line.substr(b, e - b + 1));
  }
  return lines;
}

// One batch entry: input errors become a JSON row with exit 2 instead of
// aborting the whole run.
Result batch_entry(const std::string& verb, const std::string& source, std::optional<std::size_t> max_n) {
  try {
    if (max_n && !std::filesystem::is_regular_file(source)) {
      const auto spec = catalog::parse_spec(source);
      if (spec.n > *max_n) {
        throw InputError("n=" + std::to_string(spec.n) + " exceeds --max-n " + std::to_string(*max_n));
      }
    }
    return dispatch(verb, source);
  } catch (const InputError& e) {
    return {{{"input", source}, {"error", e.what()}}, kInputError};
  } catch (const json::exception& e) {
    return {{{"input", source}, {"error", e.what()}}, kInputError};
  } catch (const PreconditionError& e) {
    return {{{"input", source}, {"error", e.what()}}, kMathFailure};
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasi-filiform Lie algebra toolkit"};
  app.require_subcommand(1);
  std::string format = "json";
  std::string out_path;
  std::optional<std::size_t> max_n;
  app.add_option("--format", format)->check(CLI::IsMember({"json", "table"}));
  app.add_option("--out", out_path);
  app.add_option("--max-n", max_n);

  std::string source;
  const std::vector<std::string> verbs{"build", "invariants", "derivations", "cohomology", "complete", "completable"};
  for (const auto& v : verbs) {
    auto* sub = app.add_subcommand(v, v + " for a family spec or a JSON algebra file");
    sub->add_option("input", source, "FAMILY:key=value,... or path to JSON")->required();
  }
  std::vector<std::string> h2words;
  app.add_subcommand("h2bound", "H^2 lower bound for the deformed A^k family")->add_option("args", h2words, "n=<count> k=<count>")->required();
  std::string batch_file, batch_verb = "completable";
  auto* batch = app.add_subcommand("batch", "run a verb over a file of inputs, one per line");
  batch->add_option("file", batch_file)->required();
  batch->add_option("--verb", batch_verb)->check(CLI::IsMember(verbs));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "error: cannot write '" << out_path << "'\n";
      return kInputError;
    }
  }
  std::ostream& os = out_path.empty() ? out : file;
  const bool table = format == "table";
  const std::string verb = app.get_subcommands().front()->get_name();

  try {
    if (verb == "batch") {
      const auto inputs = read_batch_file(batch_file);
      std::vector<Result> results(inputs.size());
      const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
      std::size_t next = 0;
      // Bounded pool: start up to `workers` jobs, collect in input order.
      std::vector<std::future<Result>> running;
      for (std::size_t i = 0; i < inputs.size(); ++i) {
        while (next < inputs.size() && next < i + workers) {
          running.push_back(std::async(std::launch::async, batch_entry, batch_verb, inputs[next], max_n));
          ++next;
        }
        results[i] = running[i].get();
      }
      int code = kOk;
      std::vector<json> rows;
      for (const auto& r : results) {
        code = std::max(code, r.code);
        rows.push_back(r.report);
      }
      if (table) {
        print_batch_table(os, rows);
      } else {
        for (const auto& r : rows) os << r.dump() << '\n';
      }
      return code;
    }

    if (max_n && !std::filesystem::is_regular_file(source) && verb != "h2bound") {
      const auto spec = catalog::parse_spec(source);
      if (spec.n > *max_n) throw InputError("n=" + std::to_string(spec.n) + " exceeds --max-n");
    }
    const Result res = verb == "h2bound" ? do_h2bound(h2words) : dispatch(verb, source);
    if (table) {
      print_table(os, res.report);
    } else {
      os << res.report.dump() << '\n';
    }
    if (res.code == kMathFailure && res.report.contains("defects")) {
      err << "Jacobi identity fails on " << res.report["defects"].size() << " triple(s)\n";
    }
    return res.code;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kMathFailure;
  }
}

}  // namespace qfl::cli
