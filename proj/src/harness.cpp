#include "sstn/harness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <string>

#include <json.hpp>

#include "sstn/baselines.hpp"
#include "sstn/decision.hpp"
#include "sstn/deviation.hpp"
#include "sstn/errors.hpp"
#include "sstn/parallel.hpp"
#include "sstn/text.hpp"

namespace sstn {

double binomial_cdf(int k, int n, double p) {
  if (k < 0) return 0;
  if (k >= n) return 1;
  if (p <= 0) return 1;
  if (p >= 1) return 0;
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  const double log_n_fact = std::lgamma(n + 1.0);
  double cdf = 0;
  for (int j = 0; j <= k; ++j) {
    cdf += std::exp(log_n_fact - std::lgamma(j + 1.0) - std::lgamma(n - j + 1.0) +
                    j * log_p + (n - j) * log_q);
  }
  return std::min(cdf, 1.0);
}

int binomial_quantile(double q, int n, double p) {
  if (p <= 0) return 0;
  if (p >= 1) return n;
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  const double log_n_fact = std::lgamma(n + 1.0);
  double cdf = 0;
  for (int k = 0; k <= n; ++k) {
    cdf += std::exp(log_n_fact - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0) +
                    k * log_p + (n - k) * log_q);
    if (cdf >= q) return k;
  }
  return n;
}

AcceptanceBand acceptance_band(int replications, double alpha) {
  if (replications < 1) throw InvalidConfig("acceptance band needs replications >= 1");
  if (!(alpha > 0 && alpha < 1)) throw InvalidConfig("alpha must be in (0, 1)");
  AcceptanceBand band;
  band.alpha = alpha;
  band.replications = replications;
  band.lower =
      static_cast<double>(binomial_quantile(0.025, replications, alpha)) / replications;
  band.upper =
      static_cast<double>(binomial_quantile(0.975, replications, alpha)) / replications;
  return band;
}

std::string_view test_name(TestKind kind) {
  switch (kind) {
    case TestKind::Sstn: return "sstn";
    case TestKind::ShapiroWilk: return "shapiro_wilk";
    case TestKind::AndersonDarling: return "anderson_darling";
    case TestKind::JarqueBera: return "jarque_bera";
    case TestKind::Lilliefors: return "lilliefors";
    case TestKind::DAgostinoPearson: return "dagostino_pearson";
  }
  return "unknown";
}

std::optional<TestKind> parse_test_kind(std::string_view name) {
  for (TestKind kind : kAllTests) {
    if (test_name(kind) == name) return kind;
  }
  return std::nullopt;
}

void StudyPlan::validate() const {
  if (families.empty()) throw InvalidConfig("study plan has no families");
  for (const auto& fp : families) {
    if (fp.parameters.empty()) {
      throw InvalidConfig(std::string("family ") +
                          std::string(family_name(fp.family)) + " has no parameters");
    }
  }
  if (sample_sizes.empty()) throw InvalidConfig("study plan has no sample sizes");
  for (int n : sample_sizes) {
    if (n < 2) throw InvalidConfig("sample sizes must be >= 2");
  }
  if (tests.empty()) throw InvalidConfig("study plan has no tests");
  if (replications < 1) throw InvalidConfig("replications must be >= 1");
  if (!(alpha > 0 && alpha < 1)) throw InvalidConfig("alpha must be in (0, 1)");
  config.validate();
}

StudyPlan default_plan(bool full_scale) {
  StudyPlan plan;
  for (Family family : kAllFamilies) {
    plan.families.push_back({family, study_parameters(family)});
  }
  plan.sample_sizes = study_sample_sizes();
  plan.tests.assign(std::begin(kAllTests), std::end(kAllTests));
  plan.replications = full_scale ? 1000 : 500;
  plan.config.replicates = full_scale ? 10000 : 2000;
  return plan;
}

StudyPlan parse_plan(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidConfig(std::string("plan is not valid JSON: ") + e.what());
  }

  StudyPlan plan;
  plan.config.replicates = 2000;  // desk-scale default; override with
                                  // calibration_replicates
  try {
    plan.replications = doc.value("replications", plan.replications);
    plan.alpha = doc.value("alpha", plan.alpha);
    plan.config.seed = doc.value("seed", plan.config.seed);
    plan.config.replicates =
        doc.value("calibration_replicates", plan.config.replicates);
    plan.config.max_level = doc.value("big_m", plan.config.max_level);
    plan.config.grid_size = doc.value("grid_h", plan.config.grid_size);
    plan.config.bound = doc.value("bound_t", plan.config.bound);
    plan.config.beta = doc.value("beta", plan.config.beta);
    plan.config.finite_threshold =
        doc.value("threshold", plan.config.finite_threshold);
    plan.lognormal_second_param_is_sd = doc.value("lognormal_sd_param", false);

    if (doc.contains("sample_sizes")) {
      plan.sample_sizes = doc.at("sample_sizes").get<std::vector<int>>();
    } else {
      plan.sample_sizes = study_sample_sizes();
    }

    if (doc.contains("tests")) {
      for (const auto& name : doc.at("tests")) {
        const auto kind = parse_test_kind(name.get<std::string>());
        if (!kind) {
          throw InvalidConfig("unknown test '" + name.get<std::string>() + "'");
        }
        plan.tests.push_back(*kind);
      }
    } else {
      plan.tests.assign(std::begin(kAllTests), std::end(kAllTests));
    }

    if (doc.contains("families")) {
      for (const auto& entry : doc.at("families")) {
        const auto family = parse_family(entry.at("family").get<std::string>());
        if (!family) {
          throw InvalidConfig("unknown family '" +
                              entry.at("family").get<std::string>() + "'");
        }
        StudyPlan::FamilyPlan fp;
        fp.family = *family;
        if (entry.contains("parameters")) {
          fp.parameters = entry.at("parameters").get<std::vector<double>>();
        } else {
          fp.parameters = study_parameters(*family);
        }
        plan.families.push_back(std::move(fp));
      }
    } else {
      for (Family family : kAllFamilies) {
        plan.families.push_back({family, study_parameters(family)});
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidConfig(std::string("malformed plan: ") + e.what());
  }
  plan.validate();
  return plan;
}

namespace {

bool test_applicable(TestKind kind, int n) {
  switch (kind) {
    case TestKind::Sstn: return n >= 4;
    case TestKind::ShapiroWilk: return n >= 3 && n <= 5000;
    case TestKind::AndersonDarling: return n >= 8;
    case TestKind::JarqueBera: return n >= 8;
    case TestKind::Lilliefors: return n >= 5;
    case TestKind::DAgostinoPearson: return n >= 20;
  }
  return false;
}

struct SizeTables {
  const CalibrationTable* sstn = nullptr;
  const CalibrationTable* lilliefors = nullptr;
};

double test_p_value(TestKind kind, const Sample& sample, const SstnConfig& config,
                    const SizeTables& tables) {
  switch (kind) {
    case TestKind::Sstn: {
      const DiscrepancyVector q = discrepancy_vector(sample, config);
      return p_value(sstn_statistic(q, *tables.sstn).statistic, *tables.sstn);
    }
    case TestKind::ShapiroWilk: return shapiro_wilk(sample).p;
    case TestKind::AndersonDarling: return anderson_darling(sample).p;
    case TestKind::JarqueBera: return jarque_bera(sample).p;
    case TestKind::Lilliefors: return lilliefors(sample, *tables.lilliefors).p;
    case TestKind::DAgostinoPearson: return dagostino_pearson(sample).p;
  }
  return 1;
}

}  // namespace

std::vector<PowerCell> run_power_study(
    const StudyPlan& plan, TableStore& store, int threads,
    const std::function<void(const PowerCell&)>& on_cell) {
  plan.validate();

  const bool wants_sstn =
      std::find(plan.tests.begin(), plan.tests.end(), TestKind::Sstn) !=
      plan.tests.end();
  const bool wants_lilliefors =
      std::find(plan.tests.begin(), plan.tests.end(), TestKind::Lilliefors) !=
      plan.tests.end();

  // Tables are built once per n, before the cells fan out.
  std::map<int, SizeTables> tables_by_size;
  for (int n : plan.sample_sizes) {
    SizeTables tables;
    if (wants_sstn && test_applicable(TestKind::Sstn, n)) {
      const TableKey key = n < plan.config.finite_threshold
                               ? TableKey::finite(n, plan.config)
                               : TableKey::asymptotic(plan.config);
      tables.sstn = &store.acquire(key);
    }
    if (wants_lilliefors && test_applicable(TestKind::Lilliefors, n)) {
      tables.lilliefors = &store.acquire(TableKey::lilliefors(n, plan.config));
    }
    tables_by_size.emplace(n, tables);
  }

  struct Group {
    Family family;
    double parameter;
    std::uint64_t parameter_index;
    int sample_size;
    size_t first_cell;
  };
  std::vector<Group> groups;
  size_t cell_count = 0;
  for (const auto& fp : plan.families) {
    for (size_t pi = 0; pi < fp.parameters.size(); ++pi) {
      for (int n : plan.sample_sizes) {
        groups.push_back({fp.family, fp.parameters[pi], pi, n, cell_count});
        cell_count += plan.tests.size();
      }
    }
  }

  const AcceptanceBand band = acceptance_band(plan.replications, plan.alpha);
  std::vector<PowerCell> cells(cell_count);
  std::mutex callback_mutex;

  parallel_for(
      static_cast<Index>(groups.size()),
      [&](Index gi) {
        const Group& group = groups[static_cast<size_t>(gi)];
        const SizeTables& tables = tables_by_size.at(group.sample_size);

        std::vector<int> rejections(plan.tests.size(), 0);
        std::vector<bool> applicable(plan.tests.size());
        for (size_t ti = 0; ti < plan.tests.size(); ++ti) {
          applicable[ti] = test_applicable(plan.tests[ti], group.sample_size);
        }

        ScenarioSpec spec{group.family, group.parameter, group.sample_size,
                          plan.lognormal_second_param_is_sd};
        for (int r = 0; r < plan.replications; ++r) {
          Rng rng = substream(plan.config.seed,
                              {stream::kPowerStudy,
                               static_cast<std::uint64_t>(group.family),
                               group.parameter_index,
                               static_cast<std::uint64_t>(group.sample_size),
                               static_cast<std::uint64_t>(r)});
          const Sample sample = draw_scenario(spec, rng);
          for (size_t ti = 0; ti < plan.tests.size(); ++ti) {
            if (!applicable[ti]) continue;
            if (test_p_value(plan.tests[ti], sample, plan.config, tables) <
                plan.alpha) {
              ++rejections[ti];
            }
          }
        }

        for (size_t ti = 0; ti < plan.tests.size(); ++ti) {
          PowerCell& cell = cells[group.first_cell + ti];
          cell.family = group.family;
          cell.parameter = group.parameter;
          cell.sample_size = group.sample_size;
          cell.test = plan.tests[ti];
          cell.replications = plan.replications;
          cell.applicable = applicable[ti];
          cell.rejections = applicable[ti] ? rejections[ti] : 0;
          if (cell.applicable && group.family == Family::NormalFamily) {
            cell.in_band = band.contains(cell.rate());
          }
          if (on_cell) {
            std::lock_guard lock(callback_mutex);
            on_cell(cell);
          }
        }
      },
      threads);

  return cells;
}

namespace {

constexpr std::string_view kCsvHeader =
    "family,parameter,n,test,R,rejections,rate,in_band";

std::string csv_row(const PowerCell& cell) {
  std::string row{family_name(cell.family)};
  row += ',';
  row += format_double(cell.parameter);
  row += ',';
  row += std::to_string(cell.sample_size);
  row += ',';
  row += test_name(cell.test);
  row += ',';
  row += std::to_string(cell.replications);
  row += ',';
  row += cell.applicable ? std::to_string(cell.rejections) : "NA";
  row += ',';
  row += cell.applicable ? format_double(cell.rate()) : "NA";
  row += ',';
  if (cell.in_band) row += *cell.in_band ? "1" : "0";
  return row;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  size_t pos = 0;
  while (true) {
    const auto next = text.find(sep, pos);
    if (next == std::string_view::npos) {
      out.push_back(text.substr(pos));
      return out;
    }
    out.push_back(text.substr(pos, next - pos));
    pos = next + 1;
  }
}

}  // namespace

std::vector<std::filesystem::path> emit_tables(const std::vector<PowerCell>& cells,
                                               const std::filesystem::path& dir) {
  if (cells.empty()) throw InvalidConfig("no cells to emit");
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoFailure("cannot create output directory " + dir.string());

  // One file per family, rows in the stable study order.
  std::vector<Family> family_order;
  std::map<Family, std::string> contents;
  for (const PowerCell& cell : cells) {
    auto [it, inserted] = contents.try_emplace(cell.family);
    if (inserted) {
      family_order.push_back(cell.family);
      it->second = std::string(kCsvHeader) + '\n';
    }
    it->second += csv_row(cell);
    it->second += '\n';
  }

  std::vector<std::filesystem::path> paths;
  for (Family family : family_order) {
    std::string slug{family_name(family)};
    for (char& c : slug) {
      if (c == '-') c = '_';
    }
    const std::filesystem::path path = dir / (slug + ".csv");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoFailure("cannot open " + path.string());
    const std::string& text = contents.at(family);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out.flush()) throw IoFailure("write failed for " + path.string());
    paths.push_back(path);
  }
  return paths;
}

std::vector<PowerCell> parse_cells_csv(std::string_view text) {
  std::vector<PowerCell> cells;
  bool first = true;
  for (std::string_view line : split(text, '\n')) {
    if (line.empty()) continue;
    if (first) {
      if (line != kCsvHeader) throw InvalidConfig("unrecognized CSV header");
      first = false;
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != 8) throw InvalidConfig("CSV row has wrong field count");
    PowerCell cell;
    const auto family = parse_family(fields[0]);
    const auto parameter = parse_double(fields[1]);
    const auto n = parse_integer(fields[2]);
    const auto test = parse_test_kind(fields[3]);
    const auto replications = parse_integer(fields[4]);
    if (!family || !parameter || !n || !test || !replications) {
      throw InvalidConfig("malformed CSV row");
    }
    cell.family = *family;
    cell.parameter = *parameter;
    cell.sample_size = static_cast<int>(*n);
    cell.test = *test;
    cell.replications = static_cast<int>(*replications);
    if (fields[5] == "NA") {
      cell.applicable = false;
      cell.rejections = 0;
    } else {
      const auto rejections = parse_integer(fields[5]);
      if (!rejections) throw InvalidConfig("malformed rejections field");
      cell.rejections = static_cast<int>(*rejections);
    }
    if (!fields[7].empty()) {
      cell.in_band = fields[7] == "1";
    }
    cells.push_back(cell);
  }
  return cells;
}

}  // namespace sstn
