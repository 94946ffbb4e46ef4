#include "w0/w0_c.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "w0/errors.hpp"
#include "w0/orthoset.hpp"
#include "w0/realforms.hpp"
#include "w0/reducer.hpp"
#include "w0/so1n.hpp"
#include "w0/subalg.hpp"

struct w0_form {
  w0::RealForm form;
  std::shared_ptr<const w0::Reducer> reducer;  // null for complex forms
  std::string summary;
};

struct w0_report {
  std::string algebra, weight_eps, weight_fund, verdict, witness;
  std::int64_t dim = 0, plus = 0, minus = 0;
};

struct w0_batch {
  std::vector<w0_report> rows;
};

struct w0_golden {
  struct Row {
    std::string form, row_id, detail;
    int table = -1;
    int ortho = 0;
  };
  std::vector<Row> rows;
};

namespace {

thread_local std::string last_error;

int fail(w0::ErrorCode code, const std::string& message) {
  last_error = message;
  return static_cast<int>(code);
}

// Runs `body`, translating exceptions into status codes.
template <class F>
int guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const w0::Error& e) {
    return fail(e.code(), e.what());
  } catch (const std::bad_alloc&) {
    return fail(w0::ErrorCode::too_large, "out of memory");
  } catch (const std::exception& e) {
    return fail(w0::ErrorCode::internal, e.what());
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

w0::Vec parse_list(const std::string& text) {
  w0::Vec v;
  if (trim(text).empty()) return v;
  for (const auto& part : split(text, ',')) v.push_back(w0::parse_rational(trim(part)));
  return v;
}

// A weight of g given either by fundamental coordinates or in the ambient
// epsilon basis.
w0::Vec weight_from(const w0::RootSystem& g, bool fund, const std::string& text) {
  w0::Vec v = parse_list(text);
  if (fund) {
    if (v.size() != static_cast<std::size_t>(g.rank))
      throw w0::InvalidArgument("expected " + std::to_string(g.rank) +
                                " fundamental coordinates, got " + std::to_string(v.size()));
    return g.from_labels(v);
  }
  if (v.size() != static_cast<std::size_t>(g.ambient_dim))
    throw w0::InvalidArgument("expected " + std::to_string(g.ambient_dim) +
                              " epsilon coordinates, got " + std::to_string(v.size()));
  return v;
}

std::string labels_text(const w0::RootSystem& g, const w0::Vec& w) {
  return w0::to_string(g.dynkin_labels(w));
}

// so(1,n) forms, or 0.
int so1n_rank(const w0::RealForm& f) {
  if (f.family_id != "so" && f.family_id != "so13") return 0;
  auto p = f.params.find("p");
  auto n = f.params.find("n");
  if (p == f.params.end() || n == f.params.end() || p->second != 1) return 0;
  return static_cast<int>(n->second - 1);
}

std::string witness_text(const w0_form& h, const w0::Vec& lambda) {
  std::ostringstream out;
  const auto& dec = h.reducer->decomposition();
  for (const auto& c : h.reducer->invariant_constituents(lambda)) {
    out << "constituent " << w0::to_string(c.highest_weight) << " multiplicity "
        << c.multiplicity << '\n';
    std::size_t k = 0;
    for (const auto& sm : dec.summands) {
      if (sm.kind == w0::Summand::Kind::Abelian) continue;
      const w0::Vec& w = c.chart_weights[k++];
      if (sm.kind != w0::Summand::Kind::So1n) continue;
      out << "  " << sm.name() << " weight " << w0::to_string(w) << " sign "
          << (w0::so1n_sign(sm.n, w) > 0 ? "+1" : "-1");
      if (sm.n == 2) {
        out << ": the zero weight line\n";
        continue;
      }
      w0::Rational l2 = w[1] < 0 ? w0::Rational(-w[1]) : w[1];
      out << '\n';
      for (const auto& row : w0::invariant_tableau(w[0], l2).rows()) out << "    " << row << '\n';
    }
  }
  return out.str();
}

w0_report run_query(const w0_form& h, const std::string& weight_text, unsigned flags) {
  std::string text = trim(weight_text);
  bool fund = true;
  if (text.rfind("fund:", 0) == 0) {
    text = text.substr(5);
  } else if (text.rfind("eps:", 0) == 0) {
    fund = false;
    text = text.substr(4);
  } else if (text.find(':') != std::string::npos) {
    throw w0::ParseError("unknown weight encoding in '" + weight_text +
                         "' (use fund: or eps:)");
  }
  const auto& g = h.form.complex_system;
  w0_report r;
  r.algebra = h.form.name;
  if (h.form.is_complex) {
    auto groups = split(text, '|');
    if (groups.size() != 2)
      throw w0::InvalidArgument("a complex form needs two weights separated by '|'");
    w0::Vec l1 = weight_from(g, fund, groups[0]);
    w0::Vec l2 = weight_from(g, fund, groups[1]);
    for (const auto& l : {l1, l2})
      if (!g.is_dominant(l) || !g.is_integral(l))
        throw w0::NotDominant("weight " + w0::to_string(l) + " is not dominant integral");
    auto a = w0::complex_w0_action(w0::family_name(g.family), g.rank, l1, l2);
    r.weight_eps = w0::to_string(l1) + "|" + w0::to_string(l2);
    r.weight_fund = labels_text(g, l1) + "|" + labels_text(g, l2);
    r.dim = a.dim;
    r.plus = a.plus;
    r.minus = a.minus;
    r.verdict = a.verdict_name();
    if (flags & W0_QUERY_WITNESS) r.witness = "no tableau witness for complex forms\n";
    return r;
  }
  if (text.find('|') != std::string::npos)
    throw w0::InvalidArgument("'|' weight pairs are only for complex forms");
  w0::Vec lambda = weight_from(g, fund, text);
  auto a = h.reducer->w0_action(lambda, !(flags & W0_QUERY_NO_PRUNE));
  r.weight_eps = w0::to_string(lambda);
  r.weight_fund = labels_text(g, lambda);
  r.dim = a.dim;
  r.plus = a.plus;
  r.minus = a.minus;
  r.verdict = a.verdict_name();
  if (flags & W0_QUERY_WITNESS) r.witness = witness_text(h, lambda);
  return r;
}

std::unique_ptr<w0_form> open_form(const std::string& name) {
  auto h = std::make_unique<w0_form>();
  h->form = w0::Catalog::builtin().lookup(name);
  if (h->form.is_complex) {
    h->summary = "complex " + h->form.complex_system.name();
  } else {
    h->reducer = w0::reducer_for(h->form.name);
    h->summary = h->reducer->decomposition().describe();
  }
  return h;
}

// Every point of [0, bound]^k, first coordinate slowest.
std::vector<w0::Vec> box(int k, std::int64_t bound) {
  std::vector<w0::Vec> out;
  if (bound < 0) return out;
  std::vector<std::int64_t> cur(k, 0);
  while (true) {
    w0::Vec v;
    for (auto c : cur) v.push_back(c);
    out.push_back(v);
    int i = k - 1;
    while (i >= 0 && cur[i] == bound) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

constexpr std::size_t kMaxBatchRows = 200000;

struct Job {
  std::shared_ptr<w0_form> form;
  std::string weight;
};

void append_grid(const std::string& piece, std::vector<Job>& jobs) {
  auto colon = piece.rfind(':');
  if (colon == std::string::npos)
    throw w0::ParseError("batch grid '" + piece + "' needs <algebra>:fund<=N or :star<=N");
  std::string algebra = trim(piece.substr(0, colon));
  std::string grid = trim(piece.substr(colon + 1));
  auto le = grid.find("<=");
  if (le == std::string::npos)
    throw w0::InvalidArgument("batch grid '" + piece + "' has no bound");
  std::string kind = trim(grid.substr(0, le));
  w0::Rational bound_q = w0::parse_rational(trim(grid.substr(le + 2)));
  if (!w0::is_integral(bound_q)) throw w0::ParseError("grid bound must be an integer");
  if (abs(bound_q) > 1000) throw w0::TooLarge("grid bound too large");
  std::int64_t bound = bound_q.get_num().get_si();
  std::shared_ptr<w0_form> form = open_form(algebra);
  const auto& g = form->form.complex_system;
  auto join = [](const w0::Vec& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + w0::to_string(v[i]);
    return s;
  };
  auto check_size = [&](double rows) {
    if (rows + static_cast<double>(jobs.size()) > kMaxBatchRows)
      throw w0::TooLarge("batch grid '" + piece + "' exceeds " + std::to_string(kMaxBatchRows) +
                         " rows");
  };
  if (kind == "fund") {
    double side = static_cast<double>(std::max<std::int64_t>(bound + 1, 0));
    int k = g.rank * (form->form.is_complex ? 2 : 1);
    double rows = 1;
    for (int i = 0; i < k; ++i) rows *= side;
    if (bound < 0) rows = 0;
    check_size(rows);
    for (const auto& v : box(k, bound)) {
      if (form->form.is_complex) {
        w0::Vec a(v.begin(), v.begin() + g.rank), b(v.begin() + g.rank, v.end());
        jobs.push_back({form, "fund:" + join(a) + "|" + join(b)});
      } else {
        jobs.push_back({form, "fund:" + join(v)});
      }
    }
  } else if (kind == "star") {
    int n = so1n_rank(form->form);
    if (n == 0) throw w0::InvalidArgument("star grids are only defined for so(1,n)");
    check_size(static_cast<double>(bound + 1) * static_cast<double>(2 * bound + 1));
    for (std::int64_t a = 0; a <= bound; ++a)
      for (std::int64_t b = (n == 3 ? -a : 0); b <= (n == 2 ? 0 : a); ++b) {
        w0::Vec w = w0::zeros(g.ambient_dim);
        w[0] = a;
        if (n > 2) w[1] = b;
        if (!w0::check_star(n, w)) continue;
        jobs.push_back({form, "eps:" + join(w)});
      }
  } else {
    throw w0::ParseError("unknown grid kind '" + kind + "' (use fund or star)");
  }
}

// Runs body(i) for i in [0, n) on up to `jobs` threads. The first failure
// (by index) is rethrown.
template <class F>
void parallel_for(std::size_t n, int jobs, F&& body) {
  std::size_t threads = static_cast<std::size_t>(std::max(1, jobs));
  threads = std::min(threads, std::max<std::size_t>(n, 1));
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

extern "C" {

const char* w0_version(void) { return "1.0.0"; }

const char* w0_last_error(void) { return last_error.c_str(); }

const char* w0_status_name(int status) {
  switch (status) {
    case W0_OK: return "ok";
    case W0_ERR_INTERNAL: return "internal";
    case W0_ERR_PARSE: return "parse";
    case W0_ERR_UNKNOWN_ALGEBRA: return "unknown_algebra";
    case W0_ERR_NOT_DOMINANT: return "not_dominant";
    case W0_ERR_GOLDEN_MISMATCH: return "golden_mismatch";
    case W0_ERR_OUT_OF_RANGE: return "out_of_range";
    case W0_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case W0_ERR_CONSISTENCY: return "consistency";
    case W0_ERR_TOO_LARGE: return "too_large";
    default: return "unknown";
  }
}

int w0_form_open(const char* name, w0_form** out) {
  return guarded([&]() -> int {
    if (!name || !out) throw w0::InvalidArgument("null argument");
    *out = open_form(name).release();
    return W0_OK;
  });
}

void w0_form_close(w0_form* form) { delete form; }
const char* w0_form_name(const w0_form* f) { return f ? f->form.name.c_str() : ""; }
int w0_form_rank(const w0_form* f) { return f ? f->form.complex_system.rank : 0; }
int w0_form_is_complex(const w0_form* f) { return f && f->form.is_complex ? 1 : 0; }
const char* w0_form_summary(const w0_form* f) { return f ? f->summary.c_str() : ""; }

int w0_query(const w0_form* form, const char* weight, unsigned flags, w0_report** out) {
  return guarded([&]() -> int {
    if (!form || !weight || !out) throw w0::InvalidArgument("null argument");
    *out = new w0_report(run_query(*form, weight, flags));
    return W0_OK;
  });
}

void w0_report_free(w0_report* r) { delete r; }
const char* w0_report_algebra(const w0_report* r) { return r->algebra.c_str(); }
const char* w0_report_weight_eps(const w0_report* r) { return r->weight_eps.c_str(); }
const char* w0_report_weight_fund(const w0_report* r) { return r->weight_fund.c_str(); }
int64_t w0_report_dim(const w0_report* r) { return r->dim; }
int64_t w0_report_plus(const w0_report* r) { return r->plus; }
int64_t w0_report_minus(const w0_report* r) { return r->minus; }
const char* w0_report_verdict(const w0_report* r) { return r->verdict.c_str(); }
const char* w0_report_witness(const w0_report* r) { return r->witness.c_str(); }

int w0_batch_run(const char* spec, int jobs, unsigned flags, w0_batch** out) {
  return guarded([&]() -> int {
    if (!spec || !out) throw w0::InvalidArgument("null argument");
    std::vector<Job> work;
    for (const auto& piece : split(spec, ';'))
      if (!trim(piece).empty()) append_grid(piece, work);
    auto batch = std::make_unique<w0_batch>();
    batch->rows.resize(work.size());
    parallel_for(work.size(), jobs, [&](std::size_t i) {
      batch->rows[i] = run_query(*work[i].form, work[i].weight, flags);
    });
    *out = batch.release();
    return W0_OK;
  });
}

void w0_batch_free(w0_batch* b) { delete b; }
size_t w0_batch_size(const w0_batch* b) { return b ? b->rows.size() : 0; }
const w0_report* w0_batch_row(const w0_batch* b, size_t i) {
  return b && i < b->rows.size() ? &b->rows[i] : nullptr;
}

int w0_golden_run(const char* scope, const char* golden_path, int jobs, w0_golden** out) {
  return guarded([&]() -> int {
    if (!out) throw w0::InvalidArgument("null argument");
    std::string sc = scope ? scope : "all";
    if (sc != "all" && sc != "classical" && sc != "exceptional")
      throw w0::InvalidArgument("scope must be all, classical or exceptional");
    std::unique_ptr<w0::GoldenTables> loaded;
    if (golden_path) loaded = std::make_unique<w0::GoldenTables>(w0::GoldenTables::from_file(golden_path));
    const w0::GoldenTables& tables = loaded ? *loaded : w0::GoldenTables::builtin();
    auto exceptional = w0::GoldenTables::builtin().exceptional_forms();
    auto is_exc = [&](const std::string& n) {
      return std::find(exceptional.begin(), exceptional.end(), n) != exceptional.end();
    };
    std::vector<w0::RealForm> forms;
    const auto& cat = w0::Catalog::builtin();
    if (sc != "exceptional")
      for (const auto& name : cat.instances(8)) {
        auto f = cat.lookup(name);
        if (!f.is_complex && !is_exc(f.name)) forms.push_back(std::move(f));
      }
    if (sc != "classical")
      for (const auto& name : exceptional) forms.push_back(cat.lookup(name));
    auto g = std::make_unique<w0_golden>();
    g->rows.resize(forms.size());
    parallel_for(forms.size(), jobs, [&](std::size_t i) {
      auto& row = g->rows[i];
      const auto& f = forms[i];
      row.form = f.name;
      std::vector<std::string> notes;
      auto v = w0::golden_check(f, tables);
      row.row_id = v.row_id;
      row.table = v.applicable ? (v.ok ? 1 : 0) : -1;
      for (const auto& d : v.diffs) notes.push_back(d);
      auto os = w0::ortho_set(f);
      auto ov = w0::verify_ortho_set(os.roots, f);
      row.ortho = ov.ok ? 1 : 0;
      for (const auto& d : ov.violations) notes.push_back("ortho: " + d);
      for (std::size_t k = 0; k < notes.size(); ++k) row.detail += (k ? "; " : "") + notes[k];
    });
    bool ok = std::all_of(g->rows.begin(), g->rows.end(),
                          [](const w0_golden::Row& r) { return r.table != 0 && r.ortho == 1; });
    *out = g.release();
    if (!ok) return fail(w0::ErrorCode::golden_mismatch, "golden-table verification failed");
    return W0_OK;
  });
}

void w0_golden_free(w0_golden* g) { delete g; }
size_t w0_golden_size(const w0_golden* g) { return g ? g->rows.size() : 0; }
const char* w0_golden_form(const w0_golden* g, size_t i) { return g->rows.at(i).form.c_str(); }
const char* w0_golden_row_id(const w0_golden* g, size_t i) { return g->rows.at(i).row_id.c_str(); }
int w0_golden_table_status(const w0_golden* g, size_t i) { return g->rows.at(i).table; }
int w0_golden_ortho_status(const w0_golden* g, size_t i) { return g->rows.at(i).ortho; }
const char* w0_golden_detail(const w0_golden* g, size_t i) { return g->rows.at(i).detail.c_str(); }

}  // extern "C"
