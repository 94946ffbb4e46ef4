// Command-line front end. Talks to the engine only through the C interface.
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "w0/w0_c.h"

namespace {

using nlohmann::json;

int report_error(int status) {
  std::cerr << "error (" << w0_status_name(status) << "): " << w0_last_error() << '\n';
  return status;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

json record(const w0_report* r, bool witness) {
  json j = {{"algebra", w0_report_algebra(r)},
            {"weight_eps", w0_report_weight_eps(r)},
            {"weight_fund", w0_report_weight_fund(r)},
            {"dim", w0_report_dim(r)},
            {"plus", w0_report_plus(r)},
            {"minus", w0_report_minus(r)},
            {"verdict", w0_report_verdict(r)}};
  if (witness) j["witness"] = lines(w0_report_witness(r));
  return j;
}

void print_human(const w0_report* r, const std::string& summary, bool witness) {
  std::cout << "algebra      " << w0_report_algebra(r) << '\n'
            << "s            " << summary << '\n'
            << "weight eps   " << w0_report_weight_eps(r) << '\n'
            << "weight fund  " << w0_report_weight_fund(r) << '\n'
            << "dim V^l      " << w0_report_dim(r) << '\n'
            << "w0 verdict   " << w0_report_verdict(r) << " (+1:" << w0_report_plus(r)
            << ", -1:" << w0_report_minus(r) << ")\n";
  if (witness) {
    std::cout << "witness\n";
    for (const auto& l : lines(w0_report_witness(r))) std::cout << "  " << l << '\n';
  }
}

int run_single(const std::string& algebra, const std::string& weight, unsigned flags,
               bool records) {
  w0_form* form = nullptr;
  if (int st = w0_form_open(algebra.c_str(), &form)) return report_error(st);
  w0_report* rep = nullptr;
  int st = w0_query(form, weight.c_str(), flags, &rep);
  if (st) {
    w0_form_close(form);
    return report_error(st);
  }
  bool witness = flags & W0_QUERY_WITNESS;
  if (records) std::cout << record(rep, witness).dump() << '\n';
  else print_human(rep, w0_form_summary(form), witness);
  w0_report_free(rep);
  w0_form_close(form);
  return 0;
}

int run_batch(const std::string& spec, int jobs, unsigned flags, bool records) {
  w0_batch* batch = nullptr;
  if (int st = w0_batch_run(spec.c_str(), jobs, flags, &batch)) return report_error(st);
  const std::size_t n = w0_batch_size(batch);
  bool witness = flags & W0_QUERY_WITNESS;
  if (!records) std::printf("%-14s %-22s %-16s %5s %5s %5s  %s\n", "algebra", "weight_eps",
                            "weight_fund", "dim", "+1", "-1", "verdict");
  for (std::size_t i = 0; i < n; ++i) {
    const w0_report* r = w0_batch_row(batch, i);
    if (records) {
      std::cout << record(r, witness).dump() << '\n';
      continue;
    }
    std::printf("%-14s %-22s %-16s %5lld %5lld %5lld  %s\n", w0_report_algebra(r),
                w0_report_weight_eps(r), w0_report_weight_fund(r),
                static_cast<long long>(w0_report_dim(r)),
                static_cast<long long>(w0_report_plus(r)),
                static_cast<long long>(w0_report_minus(r)), w0_report_verdict(r));
    if (witness)
      for (const auto& l : lines(w0_report_witness(r))) std::cout << "    " << l << '\n';
  }
  if (!records) std::cout << n << " rows\n";
  w0_batch_free(batch);
  return 0;
}

const char* mark(int status) { return status > 0 ? "pass" : status == 0 ? "FAIL" : "n/a"; }

int run_golden(const std::string& scope, const std::string& file, int jobs, bool records) {
  w0_golden* g = nullptr;
  int st = w0_golden_run(scope.c_str(), file.empty() ? nullptr : file.c_str(), jobs, &g);
  if (st && st != W0_ERR_GOLDEN_MISMATCH) return report_error(st);
  const std::size_t n = w0_golden_size(g);
  std::size_t failed = 0;
  if (!records) std::printf("%-14s %-16s %-6s %-6s %s\n", "form", "table row", "table", "ortho", "detail");
  for (std::size_t i = 0; i < n; ++i) {
    int t = w0_golden_table_status(g, i), o = w0_golden_ortho_status(g, i);
    bool ok = t != 0 && o == 1;
    if (!ok) ++failed;
    if (records) {
      std::cout << json{{"form", w0_golden_form(g, i)},
                        {"row", w0_golden_row_id(g, i)},
                        {"table", mark(t)},
                        {"ortho", mark(o)},
                        {"ok", ok},
                        {"detail", w0_golden_detail(g, i)}}
                       .dump()
                << '\n';
    } else {
      std::printf("%-14s %-16s %-6s %-6s %s\n", w0_golden_form(g, i), w0_golden_row_id(g, i),
                  mark(t), mark(o), w0_golden_detail(g, i));
    }
  }
  if (!records) std::cout << n << " rows checked, " << failed << " failed\n";
  w0_golden_free(g);
  if (st) return report_error(st);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sign of the longest restricted Weyl element on l-invariants"};
  std::string algebra, weight, batch, golden_scope, golden_file, format = "human";
  bool witness = false, no_prune = false;
  int jobs = 1;
  auto* alg = app.add_option("--algebra", algebra, "real form, e.g. so(1,5), su(1,2), EIV, complex:A2");
  auto* wt = app.add_option("--weight", weight,
                            "weight as fund:<labels> (default encoding) or eps:<coordinates>; "
                            "complex forms take two groups joined by '|'");
  app.add_flag("--witness", witness, "print the doubled tableau witness of each invariant");
  app.add_flag("--no-prune", no_prune, "use the full branching instead of the pruned walk");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"human", "records"}));
  auto* bt = app.add_option("--batch", batch,
                            "grid spec <algebra>:fund<=N or <algebra>:star<=N, ';'-separated");
  auto* vg = app.add_option("--verify-golden", golden_scope,
                            "check the golden tables: all (default), classical or exceptional")
                 ->expected(0, 1);
  app.add_option("--golden-file", golden_file, "alternative golden table file")->needs(vg);
  app.add_option("--jobs", jobs, "worker threads for batch and golden runs")
      ->check(CLI::Range(1, 256));
  wt->needs(alg);
  alg->needs(wt);
  alg->excludes(bt)->excludes(vg);
  bt->excludes(vg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return W0_ERR_PARSE;
  }

  unsigned flags = (witness ? W0_QUERY_WITNESS : 0u) | (no_prune ? W0_QUERY_NO_PRUNE : 0u);
  const bool records = format == "records";
  if (vg->count() > 0) return run_golden(golden_scope.empty() ? "all" : golden_scope,
                                         golden_file, jobs, records);
  if (bt->count() > 0) return run_batch(batch, jobs, flags, records);
  if (alg->count() > 0) return run_single(algebra, weight, flags, records);
  std::cerr << app.help() << '\n';
  return W0_ERR_PARSE;
}
