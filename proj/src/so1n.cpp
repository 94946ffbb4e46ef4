#include "w0/so1n.hpp"

#include <sstream>

#include "w0/errors.hpp"

namespace w0 {

DynkinType so1n_type(int n) {
  if (n < 2) throw InvalidArgument("so(1,n) needs n >= 2, got n = " + std::to_string(n));
  if (n == 2) return {"B", 1};
  if (n == 3) return {"D2special", 2};
  if (n % 2 == 0) return {"B", n / 2};
  return {"D", (n + 1) / 2};
}

void validate_so1n_weight(int n, const Vec& lambda) {
  DynkinType t = so1n_type(n);
  if (static_cast<int>(lambda.size()) != t.rank)
    throw InvalidArgument("so(1," + std::to_string(n) + ") weights have " +
                          std::to_string(t.rank) + " coordinates, got " +
                          std::to_string(lambda.size()));
  bool all_int = is_integral(lambda);
  bool all_half = true;
  for (const auto& x : lambda) all_half = all_half && !is_integral(x) && is_integral(2 * x);
  if (!all_int && !all_half)
    throw NotDominant(to_string(lambda) +
                      " is not integral: coordinates must be all integers or all half-integers");
  auto fail = [&] {
    throw NotDominant(to_string(lambda) + " is not dominant for " + t.name());
  };
  std::size_t k = lambda.size();
  for (std::size_t i = 0; i + 2 < k; ++i)
    if (lambda[i] < lambda[i + 1]) fail();
  if (t.family == "B") {
    if (k >= 2 && lambda[k - 2] < lambda[k - 1]) fail();
    if (lambda[k - 1] < 0) fail();
  } else {
    Rational last = abs(lambda[k - 1]);
    if (lambda[k - 2] < last) fail();
  }
}

bool check_star(int n, const Vec& lambda) {
  validate_so1n_weight(n, lambda);
  if (n == 2) return is_integral(lambda[0]);
  for (std::size_t i = 2; i < lambda.size(); ++i)
    if (lambda[i] != 0) return false;
  if (!is_integral(lambda[0]) || !is_integral(lambda[1])) return false;
  mpz_class sum = lambda[0].get_num() + lambda[1].get_num();
  return mpz_even_p(sum.get_mpz_t()) != 0;
}

int so1n_dim(int n, const Vec& lambda) { return check_star(n, lambda) ? 1 : 0; }

int so1n_sign(int n, const Vec& lambda) {
  if (!check_star(n, lambda))
    throw InvalidArgument("no l-invariants in the so(1," + std::to_string(n) +
                          ") module " + to_string(lambda) + ", so w0 has no sign");
  mpz_class l1 = lambda[0].get_num();
  return mpz_even_p(l1.get_mpz_t()) ? 1 : -1;
}

namespace {

bool on_grid(const Rational& x, int denom) { return is_integral(x * denom); }

}  // namespace

std::vector<std::string> DoubledTableau::violations(const Rational& l1,
                                                    const Rational& l2) const {
  std::vector<std::string> bad;
  if (!(0 <= a1 && a1 <= a2 && a2 <= a2bar && a2bar <= a1bar)) bad.push_back("first row not monotone");
  if (!(0 <= b1 && b1 <= b2 && b2 <= b2bar && b2bar <= b1bar)) bad.push_back("second row not monotone");
  for (const auto* x : {&a1, &a2, &a2bar, &a1bar, &b1, &b2, &b2bar, &b1bar})
    if (!on_grid(*x, 4)) bad.push_back("parameter off the quarter grid");
  if (a1bar != l1) bad.push_back("first row length differs from lambda1");
  if (b1bar != l2) bad.push_back("second row length differs from lambda2");
  // Equal numbers of each symbol and its bar.
  Rational ones = a1 + b1, onebars = (a1bar - a2bar) + (b1bar - b2bar);
  Rational twos = (a2 - a1) + (b2 - b1), twobars = (a2bar - a2) + (b2bar - b2);
  if (ones != onebars || twos != twobars) bad.push_back("not null");
  if (a2 != a1 + b2bar) bad.push_back("nullity identity a2 = a1 + b2bar fails");
  return bad;
}

std::vector<std::string> DoubledTableau::rows() const {
  auto row = [](const Rational& s1, const Rational& s2, const Rational& s2b,
                const Rational& s1b) {
    std::string out;
    auto put = [&](const Rational& count, const char* sym) {
      Rational boxes = 2 * count;
      if (!is_integral(boxes)) throw InvalidArgument("tableau with a fractional box count");
      for (long i = 0; i < boxes.get_num().get_si(); ++i) {
        if (!out.empty()) out += ' ';
        out += sym;
      }
    };
    put(s1, "1");
    put(s2 - s1, "2");
    put(s2b - s2, "2̄");
    put(s1b - s2b, "1̄");
    return out;
  };
  return {row(a1, a2, a2bar, a1bar), row(b1, b2, b2bar, b1bar)};
}

std::string DoubledTableau::describe() const {
  std::ostringstream os;
  os << "a1=" << to_string(a1) << " a2=" << to_string(a2) << " a2bar=" << to_string(a2bar)
     << " a1bar=" << to_string(a1bar) << "; b1=" << to_string(b1) << " b2=" << to_string(b2)
     << " b2bar=" << to_string(b2bar) << " b1bar=" << to_string(b1bar);
  return os.str();
}

namespace {

void require_tableau_input(const Rational& l1, const Rational& l2) {
  if (!is_integral(l1) || !is_integral(l2) || l2 < 0 || l1 < l2)
    throw InvalidArgument("the tableau needs integers lambda1 >= lambda2 >= 0, got (" +
                          to_string(l1) + ", " + to_string(l2) + ")");
  if (!is_integral((l1 + l2) / 2))
    throw InvalidArgument("the tableau needs lambda1 + lambda2 even, got (" + to_string(l1) +
                          ", " + to_string(l2) + ")");
}

}  // namespace

DoubledTableau invariant_tableau(const Rational& l1, const Rational& l2) {
  require_tableau_input(l1, l2);
  DoubledTableau t;
  Rational quarter = (l1 + l2) / 4, half_diff = (l1 - l2) / 2;
  t.a1 = quarter > half_diff ? quarter : half_diff;
  t.a2 = t.a2bar = (l1 + l2) / 2;
  t.a1bar = l1;
  t.b1 = t.b2 = 0;
  t.b2bar = quarter < l2 ? quarter : l2;
  t.b1bar = l2;
  return t;
}

TableauSearch search_tableaux(const Rational& l1, const Rational& l2) {
  require_tableau_input(l1, l2);
  // Work in quarter units.
  const long A = Rational(4 * l1).get_num().get_si();
  const long B = Rational(4 * l2).get_num().get_si();
  TableauSearch out;
  auto q = [](long x) {
    Rational r(x, 4);
    r.canonicalize();
    return r;
  };
  for (long a1 = 0; a1 <= A; ++a1)
    for (long a2 = a1; a2 <= A; ++a2)
      for (long a2b = a2; a2b <= A; ++a2b)
        for (long b1 = 0; b1 <= B; ++b1)
          for (long b2 = b1; b2 <= B; ++b2)
            for (long b2b = b2; b2b <= B; ++b2b) {
              ++out.examined;
              if (b1 != 0 || b2 != 0) continue;  // no 1 or 2 in the second row
              if (a2b != a2) continue;            // codominance
              // nullity: as many 1's as 1bar's, as many 2's as 2bar's
              if (a1 + b1 != (A - a2b) + (B - b2b)) continue;
              if ((a2 - a1) + (b2 - b1) != (a2b - a2) + (b2b - b2)) continue;
              if (b2b > a1) continue;                 // strong standardness
              if (b2b < a1 && b2b != B) continue;     // strong standardness
              DoubledTableau t{q(a1), q(a2), q(a2b), q(A), q(b1), q(b2), q(b2b), q(B)};
              out.survivors.push_back(t);
            }
  return out;
}

bool tableau_unique(const Rational& l1, const Rational& l2) {
  auto s = search_tableaux(l1, l2);
  return s.survivors.size() == 1 && s.survivors[0] == invariant_tableau(l1, l2);
}

}  // namespace w0
