#include "kappa/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "kappa/combinatorics.hpp"
#include "kappa/intersection.hpp"
#include "kappa/pairing.hpp"
#include "kappa/verify.hpp"

namespace kappa::cli {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_exponents(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 9)
      throw UsageError("malformed exponent list '" + text + "'");
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw UsageError("empty exponent list");
  return out;
}

Partition parse_partition(const std::string& text) {
  try {
    return Partition::parse(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("malformed partition '" + text + "' (expected a1+a2+...)");
  }
}

Profile parse_profile(const std::string& text) {
  try {
    return Profile::parse(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("malformed profile '" + text + "' (expected (g1,m1)(g2,m2)...)");
  }
}

void require_range(int d, int g, int n) {
  if (g < 0 || n < 0 || 2 * g - 2 + n <= 0) throw UsageError("unstable (genus, points)");
  if (d < 1 || d > 3 * g - 3 + n) throw UsageError("degree must lie in 1..3g-3+n");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact psi-class intersection numbers and kappa ring ranks", "kappa"};
  app.require_subcommand(1);
  app.fallthrough();

  unsigned threads = 1;
  std::string cache_path;
  if (const char* env = std::getenv("KAPPA_CACHE")) cache_path = env;
  app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--cache", cache_path, "memo cache file (default $KAPPA_CACHE)");

  int genus = 0, points = 0, degree = 0;
  std::string exps, partition_text, profile_text, format = "text", table_format = "csv", suite = "all";
  bool want_dump = false;
  int n_max = 8, g_max = 2, codim_min = 2, codim_max = 6;

  auto* psi_cmd = app.add_subcommand("psi", "intersection number <tau_a1 ... tau_an>_g");
  psi_cmd->add_option("--genus", genus)->required()->check(CLI::NonNegativeNumber);
  psi_cmd->add_option("--exps", exps, "comma-separated exponents")->required();

  auto* pair_cmd = app.add_subcommand("pair", "pairing <p, q> and its normalized value");
  pair_cmd->add_option("--partition", partition_text, "a1+a2+...")->required();
  pair_cmd->add_option("--profile", profile_text, "(g1,m1)(g2,m2)...")->required();

  auto* profiles_cmd = app.add_subcommand("profiles", "profiles Q(d;g,n) or Q(p;g,n)");
  profiles_cmd->add_option("--degree", degree);
  profiles_cmd->add_option("--genus", genus)->required()->check(CLI::NonNegativeNumber);
  profiles_cmd->add_option("--points", points)->required()->check(CLI::NonNegativeNumber);
  profiles_cmd->add_option("--partition", partition_text, "restrict to one partition");
  profiles_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* rank_cmd = app.add_subcommand("rank", "rank of R(d;g,n)");
  auto* dump_cmd = app.add_subcommand("dump", "print the matrix R(d;g,n)");
  for (auto* cmd : {rank_cmd, dump_cmd}) {
    cmd->add_option("--degree", degree)->required();
    cmd->add_option("--genus", genus)->required()->check(CLI::NonNegativeNumber);
    cmd->add_option("--points", points)->required()->check(CLI::NonNegativeNumber);
  }
  rank_cmd->add_flag("--dump", want_dump, "print the matrix instead of the rank");

  auto* table_cmd = app.add_subcommand("table", "rank grid by codimension, genus and points");
  table_cmd->add_option("--codim-min", codim_min)->check(CLI::NonNegativeNumber);
  table_cmd->add_option("--codim-max", codim_max)->check(CLI::NonNegativeNumber);
  table_cmd->add_option("--g-max", g_max)->check(CLI::NonNegativeNumber);
  table_cmd->add_option("--n-max", n_max)->check(CLI::PositiveNumber);
  table_cmd->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));

  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  verify_cmd
      ->add_option("--suite", suite)
      ->check(CLI::IsMember({"all", "divisor", "detlaw", "table1", "block11", "codim1", "table2", "partition-sets"}));
  verify_cmd->add_option("--n-max", n_max, "largest n for divisor/codim1/partition-sets")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--g-max", g_max, "largest genus for detlaw/table1")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

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
    err << "kappa: " << e.what() << " (run kappa --help for usage)\n";
    return kUsage;
  }

  IntersectionTable& table = default_table();
  if (!cache_path.empty()) {
    const auto loaded = table.load(cache_path);
    if (!loaded.opened)
      err << "kappa: warning: cannot read cache " << cache_path << ", starting cold\n";
    else if (loaded.malformed)
      err << "kappa: warning: skipped " << loaded.malformed << " malformed cache lines\n";
  }

  int status = kOk;
  try {
    if (psi_cmd->parsed()) {
      out << to_string(psi_integral(genus, parse_exponents(exps))) << '\n';
    } else if (pair_cmd->parsed()) {
      const Partition p = parse_partition(partition_text);
      const Profile q = parse_profile(profile_text);
      const Rational v = pair(p, q);
      out << "pair " << to_string(v) << "\nnormalized " << to_string(v / lambda_norm(q)) << '\n';
    } else if (profiles_cmd->parsed()) {
      std::vector<Profile> qs;
      if (!partition_text.empty()) {
        qs = profiles(parse_partition(partition_text), genus, points);
      } else {
        require_range(degree, genus, points);
        qs = profiles_all(degree, genus, points).profiles;
      }
      if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& q : qs) j.push_back({{"profile", q.to_string()}, {"shape", q.shape().to_string()}});
        out << j.dump(2) << '\n';
      } else {
        for (const auto& q : qs) out << q.to_string() << '\t' << q.shape().to_string() << '\n';
      }
    } else if (rank_cmd->parsed() || dump_cmd->parsed()) {
      require_range(degree, genus, points);
      if (want_dump || dump_cmd->parsed())
        out << dump(pairing_matrix(degree, genus, points, threads));
      else
        out << kappa_rank(degree, genus, points, threads) << '\n';
    } else if (table_cmd->parsed()) {
      if (codim_min > codim_max) throw UsageError("--codim-min exceeds --codim-max");
      const auto result = table2(codim_min, codim_max, g_max, n_max, threads);
      out << (table_format == "json" ? table2_json(result.cells) : table2_csv(result.cells));
    } else if (verify_cmd->parsed()) {
      std::vector<CheckReport> reports;
      auto wants = [&](const char* name) { return suite == "all" || suite == name; };
      if (wants("divisor"))
        for (int n = 2; n <= n_max; ++n) reports.push_back(check_divisor_relation(n));
      if (wants("detlaw"))
        for (int g = 1; g <= std::max(g_max, 1); ++g) reports.push_back(det_law_check(g));
      if (wants("table1"))
        for (int g = 1; g <= std::max(g_max, 1); ++g)
          for (int d : {3 * g + 2, 3 * g + 3}) reports.push_back(table1_check(g, d));
      if (wants("block11"))
        for (int g = 2; g <= std::max(g_max, 2); ++g) reports.push_back(block11_check(g, 3 * g + 3, 3 * g + 4));
      if (wants("codim1"))
        for (int n = 2; n <= n_max; ++n) reports.push_back(codim1_check(1, n));
      if (wants("partition-sets"))
        for (int g = 0; g <= g_max; ++g)
          for (int n = 1; n <= n_max; ++n)
            for (int d = 1; d <= 3 * g - 3 + n; ++d) reports.push_back(partition_set_check(d, g, n));
      if (wants("table2")) reports.push_back(table2(2, 6, 2, 10, threads).report);

      bool ok = true;
      for (const auto& r : reports) {
        ok = ok && r.passed();
        err << r.suite << ": " << r.elapsed.count() << " s\n";
      }
      if (format == "json") {
        out << format_json(reports);
      } else {
        for (const auto& r : reports) out << format_text(r);
        out << (ok ? "all checks passed\n" : "some checks FAILED\n");
      }
      status = ok ? kOk : kCheckFailed;
    }
  } catch (const UsageError& e) {
    err << "kappa: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "kappa: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "kappa: " << e.what() << '\n';
    return kUsage;
  }

  if (!cache_path.empty()) {
    try {
      table.save(cache_path);
    } catch (const std::exception& e) {
      err << "kappa: warning: " << e.what() << '\n';
    }
  }
  return status;
}

}  // namespace kappa::cli
