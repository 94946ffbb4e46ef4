// Exercises the shared library through its C interface only.
#include <string>
#include <thread>
#include <vector>

#include "doctest.h"
#include "w0/w0_c.h"

namespace {

struct Form {
  w0_form* h = nullptr;
  explicit Form(const char* name) { REQUIRE(w0_form_open(name, &h) == W0_OK); }
  ~Form() { w0_form_close(h); }
};

struct Report {
  w0_report* r = nullptr;
  int status = 0;
  Report(const Form& f, const char* weight, unsigned flags = 0) {
    status = w0_query(f.h, weight, flags, &r);
  }
  ~Report() { w0_report_free(r); }
};

std::vector<std::string> batch_rows(const char* spec, int jobs) {
  w0_batch* b = nullptr;
  REQUIRE(w0_batch_run(spec, jobs, 0, &b) == W0_OK);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < w0_batch_size(b); ++i) {
    const w0_report* r = w0_batch_row(b, i);
    out.push_back(std::string(w0_report_algebra(r)) + " " + w0_report_weight_eps(r) + " " +
                  std::to_string(w0_report_plus(r)) + "/" + std::to_string(w0_report_minus(r)));
  }
  w0_batch_free(b);
  return out;
}

}  // namespace

TEST_CASE("single queries") {
  Form so15("so(1,5)");
  Report a(so15, "eps:1,1,0");
  REQUIRE(a.status == W0_OK);
  CHECK(w0_report_dim(a.r) == 1);
  CHECK(std::string(w0_report_verdict(a.r)) == "minus_id");
  CHECK(std::string(w0_report_weight_fund(a.r)) == "(0,1,1)");

  Form sl3("sl(3,R)");
  Report b(sl3, "fund:1,1");
  CHECK(w0_report_dim(b.r) == 2);
  CHECK(w0_report_plus(b.r) == 1);
  CHECK(w0_report_minus(b.r) == 1);
  CHECK(std::string(w0_report_verdict(b.r)) == "mixed");
  Report b2(sl3, "1,1");  // fundamental coordinates are the default
  CHECK(std::string(w0_report_weight_eps(b2.r)) == "(1,0,-1)");
  Report b3(sl3, "fund:1,1", W0_QUERY_NO_PRUNE);
  CHECK(w0_report_plus(b3.r) == 1);

  Form so14("so(1,4)");
  Report c(so14, "eps:1/2,1/2");
  CHECK(w0_report_dim(c.r) == 0);
  CHECK(std::string(w0_report_verdict(c.r)) == "zero");

  Form cx("complex:A1");
  Report d(cx, "fund:2|0");
  CHECK(w0_report_dim(d.r) == 1);
  CHECK(std::string(w0_report_verdict(d.r)) == "minus_id");  // so(1,3) weight (1,1)
  CHECK(w0_form_is_complex(cx.h) == 1);
  CHECK(w0_form_rank(sl3.h) == 2);
  CHECK(std::string(w0_form_summary(sl3.h)).find("so(1,2)") != std::string::npos);
}

TEST_CASE("witness text") {
  Form so15("so(1,5)");
  Report a(so15, "eps:3,1,0", W0_QUERY_WITNESS);
  std::string w = w0_report_witness(a.r);
  CHECK(w.find("so(1,5) weight (3,1,0) sign -1") != std::string::npos);
  Report b(so15, "eps:3,1,0");
  CHECK(std::string(w0_report_witness(b.r)).empty());
}

TEST_CASE("errors carry distinct status codes") {
  w0_form* f = nullptr;
  CHECK(w0_form_open("sl(3,Q)", &f) == W0_ERR_UNKNOWN_ALGEBRA);
  CHECK(std::string(w0_last_error()).find("sl(3,Q)") != std::string::npos);
  CHECK(w0_form_open("su(3,1)", &f) == W0_ERR_OUT_OF_RANGE);
  CHECK(w0_form_open(nullptr, &f) == W0_ERR_INVALID_ARGUMENT);
  Form sl3("sl(3,R)");
  CHECK(Report(sl3, "fund:1,x").status == W0_ERR_PARSE);
  CHECK(Report(sl3, "dyn:1,1").status == W0_ERR_PARSE);
  CHECK(Report(sl3, "fund:-1,0").status == W0_ERR_NOT_DOMINANT);
  CHECK(Report(sl3, "fund:1").status == W0_ERR_INVALID_ARGUMENT);
  CHECK(Report(sl3, "fund:1,0|0,1").status == W0_ERR_INVALID_ARGUMENT);
  Form cx("complex:A2");
  CHECK(Report(cx, "fund:1,0").status == W0_ERR_INVALID_ARGUMENT);
  CHECK(std::string(w0_status_name(W0_ERR_NOT_DOMINANT)) == "not_dominant");
}

TEST_CASE("last error is per thread") {
  w0_form* f = nullptr;
  REQUIRE(w0_form_open("nonsense", &f) != W0_OK);
  std::string other;
  std::thread t([&] { other = w0_last_error(); });
  t.join();
  CHECK(other.empty());
  CHECK(!std::string(w0_last_error()).empty());
}

TEST_CASE("batch grids") {
  auto rows = batch_rows("so(1,4):star<=3", 1);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == "so(1,4) (0,0) 1/0");
  CHECK(rows[1] == "so(1,4) (1,1) 0/1");
  CHECK(rows[5] == "so(1,4) (3,3) 0/1");
  CHECK(batch_rows("sl(4,R):fund<=1", 1).size() == 8);
  CHECK(batch_rows("sl(4,R):fund<=-1", 1).empty());
  CHECK(batch_rows("", 1).empty());
  CHECK(batch_rows("so(1,3):star<=2", 1).size() == 6);

  const char* spec = "sl(3,R):fund<=3; su(2,2):fund<=1; so(1,6):star<=4; complex:A1:fund<=2";
  auto serial = batch_rows(spec, 1);
  CHECK(serial == batch_rows(spec, 4));
  CHECK(serial == batch_rows(spec, 1));
  CHECK(serial.size() == 16 + 8 + 9 + 9);

  w0_batch* b = nullptr;
  CHECK(w0_batch_run("sl(4,R):fund", 1, 0, &b) == W0_ERR_INVALID_ARGUMENT);
  CHECK(w0_batch_run("sl(4,R):box<=2", 1, 0, &b) == W0_ERR_PARSE);
  CHECK(w0_batch_run("sl(4,R):star<=2", 1, 0, &b) == W0_ERR_INVALID_ARGUMENT);
  CHECK(w0_batch_run("sl(9,R):fund<=9", 1, 0, &b) == W0_ERR_TOO_LARGE);
}

TEST_CASE("golden verification") {
  w0_golden* g = nullptr;
  REQUIRE(w0_golden_run("exceptional", nullptr, 2, &g) == W0_OK);
  CHECK(w0_golden_size(g) == 12);
  for (std::size_t i = 0; i < w0_golden_size(g); ++i) {
    CHECK(w0_golden_table_status(g, i) == 1);
    CHECK(w0_golden_ortho_status(g, i) == 1);
  }
  w0_golden_free(g);

  REQUIRE(w0_golden_run("all", nullptr, 2, &g) == W0_OK);
  std::size_t uncovered = 0;
  for (std::size_t i = 0; i < w0_golden_size(g); ++i)
    if (w0_golden_table_status(g, i) < 0) {
      ++uncovered;
      CHECK(std::string(w0_golden_form(g, i)) == "so(1,3)");
    }
  CHECK(uncovered == 1);
  CHECK(w0_golden_size(g) > 150);
  w0_golden_free(g);

  REQUIRE(w0_golden_run("exceptional", W0_FIXTURES "/golden_corrupt.json", 1, &g) ==
          W0_ERR_GOLDEN_MISMATCH);
  std::vector<std::string> failing;
  for (std::size_t i = 0; i < w0_golden_size(g); ++i)
    if (w0_golden_table_status(g, i) == 0) failing.push_back(w0_golden_form(g, i));
  CHECK(failing == std::vector<std::string>{"G"});
  w0_golden_free(g);

  g = nullptr;
  CHECK(w0_golden_run("all", W0_FIXTURES "/golden_malformed.json", 1, &g) == W0_ERR_PARSE);
  CHECK(g == nullptr);
  CHECK(w0_golden_run("some", nullptr, 1, &g) == W0_ERR_INVALID_ARGUMENT);
}
