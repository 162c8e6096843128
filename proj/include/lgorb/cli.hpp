// Command-line front end: `catalog list`, `compute`, `verify`.
// run_cli is the whole program minus main(), so it can be driven from tests.

#ifndef LGORB_CLI_HPP_
#define LGORB_CLI_HPP_

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "lgorb/catalog.hpp"
#include "lgorb/orbifold.hpp"
#include "lgorb/serialize.hpp"

namespace lgorb::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kInputError = 2, kInadmissible = 3 };

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Worker cap from LGORB_THREADS; unset means one per hardware thread.
inline unsigned threads_from_env() {
  const char* v = std::getenv("LGORB_THREADS");
  if (!v || !*v) return std::max(1u, std::thread::hardware_concurrency());
  try {
    std::size_t used = 0;
    const long n = std::stol(v, &used);
    if (used != std::string(v).size() || n < 0) throw std::invalid_argument(v);
    return static_cast<unsigned>(n);
  } catch (const std::exception&) {
    throw InputError(std::string("LGORB_THREADS must be a non-negative integer, got '") + v + "'");
  }
}

struct ResolvedGroup {
  FiniteMatrixGroup group;
  std::string descriptor;
};

inline ResolvedGroup resolve_group(const std::string& spec, bool hat) {
  ResolvedGroup out;
  if (spec.rfind("catalog:", 0) == 0) {
    const std::string key = spec.substr(8);
    out.group = catalog_group(key, hat);
    out.descriptor = "catalog:" + key + (hat ? " (hat)" : "");
    return out;
  }
  if (spec.rfind("file:", 0) != 0) throw InputError("--group must be catalog:<key> or file:<path>");
  const std::string path = spec.substr(5);
  std::ifstream in(path);
  if (!in) throw InputError("cannot open group file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("group file '" + path + "' is not valid JSON: " + e.what());
  }
  GroupInput input = group_input_from_json(j);
  for (std::size_t k = 0; k < input.generators.size(); ++k) {
    const CycNum& d = input.generators[k].det();
    if (!(d == CycNum(input.conductor, 1) || d == CycNum(input.conductor, -1)))
      throw InadmissibleGroup("generator " + input.labels[k].to_string() + " has determinant " + d.to_string());
  }
  out.group = generate_closure(input.generators, input.labels);
  const bool want_hat = hat || input.hat;
  if (want_hat) out.group = hat_extend(out.group).group;
  out.descriptor = "file:" + path + (want_hat ? " (hat)" : "");
  return out;
}

inline void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw InputError("cannot write '" + path + "'");
    f << text;
    if (!f) throw InputError("failed writing '" + tmp + "'");
  }
  std::filesystem::rename(tmp, path);
}

struct VerifyLine {
  std::string key;
  bool hat = false;
  std::string status;  // PASS, FAIL or INFO
  std::size_t total = 0;
  int expected_total = 0;
  std::string detail;
};

inline std::string format_vector(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

inline VerifyLine verify_one(const std::string& key, bool hat, unsigned threads) {
  const ExpectedResult ex = expected(key, hat);
  const auto [f, w] = klein_quartic();
  HHOptions opts;
  opts.threads = threads;
  opts.descriptor = "catalog:" + key + (hat ? " (hat)" : "");
  const HHReport r = compute_hh(f, w, catalog_group(key, hat), opts);

  VerifyLine line{key, hat, "PASS", r.total_dim, ex.total_dim, ""};
  std::vector<std::string> diffs;
  if (static_cast<int>(r.total_dim) != ex.total_dim)
    diffs.push_back("total " + std::to_string(r.total_dim) + " vs " + std::to_string(ex.total_dim));
  if (static_cast<int>(r.identity_dim()) != ex.identity_dim)
    diffs.push_back("identity " + std::to_string(r.identity_dim()) + " vs " + std::to_string(ex.identity_dim));
  if (ex.identity_dimension_vector && r.identity_dimension_vector != *ex.identity_dimension_vector)
    diffs.push_back("vector " + format_vector(r.identity_dimension_vector) + " vs " +
                    format_vector(*ex.identity_dimension_vector));
  if (ex.per_sector_dims) {
    std::vector<int> got;
    for (std::size_t k = 1; k < r.sectors.size(); ++k) got.push_back(static_cast<int>(r.sectors[k].invariant_dim));
    std::vector<int> want = *ex.per_sector_dims;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want) diffs.push_back("twisted " + format_vector(got) + " vs " + format_vector(want));
  }
  for (std::size_t i = 0; i < diffs.size(); ++i) line.detail += (i ? "; " : "") + diffs[i];
  if (!diffs.empty()) line.status = ex.trust == Trust::PaperDisputed ? "INFO" : "FAIL";
  else if (ex.trust == Trust::PaperDisputed) line.status = "INFO";
  if (ex.trust == Trust::PaperDisputed) line.detail += (line.detail.empty() ? "" : "; ") + std::string("paper-disputed");
  return line;
}

inline std::string format_verify_line(const VerifyLine& l) {
  std::ostringstream os;
  const std::string name = l.key + (l.hat ? "^" : "");
  os << std::left << std::setw(5) << l.status << ' ' << std::setw(5) << name << " total " << std::setw(3)
     << l.total << " expected " << std::setw(3) << l.expected_total;
  if (!l.detail.empty()) os << "  " << l.detail;
  return os.str();
}

inline int run_catalog_list(std::ostream& out) {
  out << std::left << std::setw(5) << "key" << ' ' << std::setw(6) << "order" << ' ' << std::setw(9) << "hat" << ' '
      << "description\n";
  for (const auto& e : catalog_entries()) {
    out << std::setw(5) << e.key << ' ' << std::setw(6) << e.order << ' ' << std::setw(9)
        << (e.expected_hat ? "recorded" : "yes") << ' ' << e.description << '\n';
  }
  return kOk;
}

/// Arguments exclude the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbifold state spaces HH*(f, G) of the Klein quartic", "lgorb"};
  app.require_subcommand(1);

  auto* catalog = app.add_subcommand("catalog", "built-in subgroup catalog");
  catalog->add_subcommand("list", "list catalog keys");
  catalog->require_subcommand(1);

  std::string group_spec, format = "text", out_path;
  bool hat = false;
  auto* compute = app.add_subcommand("compute", "compute HH*(f, G) for one group");
  compute->add_option("--group", group_spec, "catalog:<key> or file:<path>")->required();
  compute->add_flag("--hat", hat, "adjoin -id");
  compute->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  compute->add_option("--out", out_path, "output file (default stdout)");

  bool all = false, verify_hat = false;
  std::string key;
  auto* verify = app.add_subcommand("verify", "compare against the recorded results");
  auto* all_opt = verify->add_flag("--all", all, "every catalog entry");
  auto* key_opt = verify->add_option("--key", key, "one catalog key");
  all_opt->excludes(key_opt);
  verify->add_flag("--hat", verify_hat, "use the -id extensions");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (catalog->parsed()) return run_catalog_list(out);

    const unsigned threads = threads_from_env();
    if (compute->parsed()) {
      const ResolvedGroup g = resolve_group(group_spec, hat);
      const auto [f, w] = klein_quartic(g.group.conductor());
      HHOptions opts;
      opts.threads = threads;
      opts.descriptor = g.descriptor;
      const HHReport r = compute_hh(f, w, g.group, opts);
      std::string text;
      if (format == "json") text = to_json(r).dump(2) + "\n";
      else if (format == "csv") text = to_csv(r);
      else text = to_text(r);
      write_output(text, out_path, out);
      return kOk;
    }

    if (verify->parsed()) {
      std::vector<std::pair<std::string, bool>> todo;
      if (!key.empty()) {
        expected(key, verify_hat);
        todo.emplace_back(key, verify_hat);
      } else {
        for (const auto& e : catalog_entries())
          if (!verify_hat) todo.emplace_back(e.key, false);
        for (const auto& e : catalog_entries())
          if (e.expected_hat) todo.emplace_back(e.key, true);
      }
      int failed = 0, passed = 0, info = 0;
      for (const auto& [k, h] : todo) {
        const VerifyLine line = verify_one(k, h, threads);
        out << format_verify_line(line) << "\n";
        if (line.status == "FAIL") ++failed;
        else if (line.status == "PASS") ++passed;
        else ++info;
      }
      out << passed << " confirmed, " << failed << " mismatched, " << info << " info\n";
      return failed ? kMismatch : kOk;
    }
  } catch (const InadmissibleGroup& e) {
    err << "inadmissible group: " << e.what() << "\n";
    return kInadmissible;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const GroupTooLarge& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace lgorb::cli

#endif  // LGORB_CLI_HPP_
