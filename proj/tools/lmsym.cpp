// lmsym: decide Lie metabelian symmetric elements of ZG for finite groups.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lmsym/lmsym.hpp"

namespace {

struct GroupSource {
  std::string name;
  std::string file;
};

lmsym::Group resolve(const GroupSource& src) {
  if (!src.file.empty()) return lmsym::load_group(src.file);
  return lmsym::catalog_group(src.name);
}

void add_source(CLI::App* cmd, GroupSource& src) {
  auto* name = cmd->add_option("--name", src.name, "catalog group name (e.g. Q8, SD16, Q8xC2)");
  auto* file = cmd->add_option("--file", src.file, "group file (JSON table or permutation generators)");
  name->excludes(file);
  file->excludes(name);
  cmd->callback([cmd, &src] {
    if (src.name.empty() && src.file.empty()) throw CLI::RequiredError("--name or --file");
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie metabelian symmetric elements in integral group rings"};
  app.require_subcommand(1);

  std::string format = "json";
  std::size_t budget = lmsym::kDefaultBruteBudget;
  std::size_t max_order = 32;
  std::uint64_t seed = 0;
  std::size_t sample_budget = 1000;
  std::string identity = "all";
  std::string export_dir;
  GroupSource src;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table"}));
  };

  auto* classify = app.add_subcommand("classify", "structural conditions only");
  add_source(classify, src);
  add_format(classify);

  auto* brute = app.add_subcommand("brute", "brute-force group-ring check");
  add_source(brute, src);
  add_format(brute);
  brute->add_option("--budget", budget, "maximum group order for the brute-force checker");

  auto* validate = app.add_subcommand("validate", "cross-validate structural and brute-force verdicts on the catalog");
  validate->add_option("--max-order", max_order, "largest catalog group order");
  validate->add_option("--budget", budget, "maximum group order for the brute-force checker");
  validate->add_option("--seed", seed, "sampling seed (kept for report reproducibility)");
  add_format(validate);

  auto* audit = app.add_subcommand("audit", "check group-ring identities on a group");
  add_source(audit, src);
  add_format(audit);
  audit->add_option("--identity", identity, "which identities")->check(CLI::IsMember(lmsym::identity_choices()));
  audit->add_option("--seed", seed, "sampling seed for groups above the exhaustive limit");
  audit->add_option("--sample-budget", sample_budget, "sampled tuples per identity for large groups");

  auto* cat = app.add_subcommand("catalog", "list or export the built-in groups");
  cat->add_option("--max-order", max_order, "largest group order");
  cat->add_option("--export", export_dir, "write one group file per entry into this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : lmsym::kExitInputError;
  }

  try {
    if (*classify) {
      std::cout << lmsym::render(lmsym::cmd_classify(resolve(src)), format);
    } else if (*brute) {
      std::cout << lmsym::render(lmsym::cmd_brute(resolve(src), budget), format);
    } else if (*validate) {
      auto res = lmsym::cmd_validate(max_order, budget);
      std::cout << lmsym::render(res.report, format);
      return res.exit_code;
    } else if (*audit) {
      auto res = lmsym::cmd_audit(resolve(src), identity, {.sample_budget = sample_budget, .seed = seed});
      std::cout << lmsym::render(res.report, format);
      return res.exit_code;
    } else if (*cat) {
      if (!export_dir.empty()) {
        for (const auto& p : lmsym::export_catalog(export_dir, max_order)) std::cout << p.string() << "\n";
      } else {
        for (const auto& e : lmsym::catalog(max_order))
          std::cout << e.name << "\t" << e.group.order() << "\t" << e.construction << "\n";
      }
    }
  } catch (const lmsym::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == lmsym::ErrorKind::kBudgetExceeded ? lmsym::kExitBudgetExceeded : lmsym::kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return lmsym::kExitInputError;
  }
  return lmsym::kExitOk;
}
