// Acceptance run: one PASS/FAIL line per criterion. Every comparison is exact
// (zero residual in Q(q) or Q); time limits are wall-clock.

#include "qheis/heis.hpp"
#include "qheis/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

using namespace qheis;

namespace {

using Clock = std::chrono::steady_clock;

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

struct Run {
  std::string label;
  Report report;
};

struct Verdict {
  bool pass = true;
  std::string detail;
  std::vector<Run> runs;
};

Run run(const std::string &suite, const QValue &q, std::map<std::string, long> bounds) {
  return {suite + " q=" + q.to_string(), run_suite({suite, q, std::move(bounds), jobs()})};
}

std::string describe(const Run &r) {
  const Summary s = r.report.summary();
  return r.label + " " + std::to_string(s.pass) + "/" + std::to_string(r.report.entries.size()) + " pass";
}

Verdict suites(std::vector<Run> runs) {
  Verdict v;
  for (const Run &r : runs) {
    const Summary s = r.report.summary();
    v.pass = v.pass && s.fail == 0 && s.skipped == 0 && s.pass > 0;
    v.detail += (v.detail.empty() ? "" : "; ") + describe(r);
  }
  v.runs = std::move(runs);
  return v;
}

/// Failing check names with their counts.
void print_failures(const Verdict &v) {
  for (const Run &r : v.runs) {
    std::map<std::string, int> counts;
    std::map<std::string, std::string> first;
    for (const Entry &e : r.report.entries)
      if (e.status != Status::Pass) {
        ++counts[e.check];
        first.emplace(e.check, to_string(e.tuple));
      }
    for (const auto &[check, n] : counts)
      std::printf("      %s: %s fails %d time(s), first at %s\n", r.label.c_str(), check.c_str(), n,
                  first[check].c_str());
  }
}

long count_prefix(const Report &r, const std::string &prefix) {
  return std::count_if(r.entries.begin(), r.entries.end(),
                       [&](const Entry &e) { return e.check.rfind(prefix, 0) == 0; });
}

Verdict confluence() {
  const QValue q = QValue::symbolic();
  std::vector<Word> words;
  for (std::size_t n = 1; n <= 10; ++n)
    for (unsigned long bits = 0; bits < (1UL << n); ++bits) {
      std::string s(n, 'A');
      for (std::size_t i = 0; i < n; ++i)
        if (bits & (1UL << (n - 1 - i)))
          s[i] = 'B';
      words.emplace_back(s);
    }
  std::vector<char> agree(words.size(), 0);
  std::vector<std::thread> pool;
  const unsigned J = jobs();
  for (unsigned j = 0; j < J; ++j)
    pool.emplace_back([&, j] {
      for (std::size_t i = j; i < words.size(); i += J)
        agree[i] = normal_form(words[i], q, RewriteStrategy::Leftmost) ==
                   normal_form(words[i], q, RewriteStrategy::Rightmost);
    });
  for (std::thread &t : pool)
    t.join();
  const long ok = std::count(agree.begin(), agree.end(), 1);
  Verdict v;
  v.pass = ok == static_cast<long>(words.size()) && words.size() == 2046;
  v.detail = "leftmost vs rightmost " + std::to_string(ok) + "/" + std::to_string(words.size()) + " words agree";
  return v;
}

struct Criterion {
  int number;
  std::string title;
  double limit_seconds; // 0 = no limit
  std::function<Verdict()> check;
};

} // namespace

int main() {
  const QValue sym = QValue::symbolic(), zero = QValue::rational(0);
  const std::vector<Criterion> criteria = {
      {1, "reordering formulas, n <= 8", 5, [&] { return suites({run("reorder", sym, {{"n", 8}})}); }},
      {2, "B^nA^n / A^nB^n expansions and Gauss pathway, n <= 8", 30,
       [&] { return suites({run("bnan-anbn", sym, {{"n", 8}})}); }},
      {3, "shift identity, |P| <= 5, n <= 4", 60, [&] { return suites({run("shift", sym, {{"len", 5}, {"n", 4}})}); }},
      {4, "ad<BA>, ad B and <BA^n>, <B^nA> closed forms, m,n <= 8", 0,
       [&] { return suites({run("adad", sym, {{"m", 8}, {"n", 8}}), run("fban", sym, {{"n", 8}})}); }},
      {5, "beta closed forms, k,l <= 4", 0, [&] { return suites({run("beta-closed", sym, {{"k", 4}, {"l", 4}})}); }},
      {6, "Lie product table and four-index relation, indices <= 3", 600,
       [&] {
         const std::map<std::string, long> b{{"k", 3}, {"l", 3}, {"m", 3}, {"n", 3}};
         Verdict v = suites({run("table1", sym, b), run("bigcomrel", sym, b)});
         const Report &big = v.runs[1].report;
         std::string cases;
         for (const char *which : {"l>n", "l<n", "l=n"}) {
           const long n = count_prefix(big, std::string("[Abar(k,l), Bbar(m,n)] case ") + which);
           v.pass = v.pass && n >= 10;
           cases += std::string(cases.empty() ? "" : ", ") + which + " x" + std::to_string(n);
         }
         v.detail += "; cases " + cases;
         return v;
       }},
      {7, "Lie ideal table, m,n <= 4, k,l <= 3", 0,
       [&] { return suites({run("table2", sym, {{"m", 4}, {"n", 4}, {"k", 3}, {"l", 3}})}); }},
      {8, "generic nilpotency, 2 <= m,n <= 5", 0,
       [&] { return suites({run("nilpotent-generic", sym, {{"m", 5}, {"n", 5}})}); }},
      {9, "q = 0 identities and memberships", 0,
       [&] {
         return suites({run("zero-basis", zero, {{"fer", 8}, {"bracket", 6}, {"low", 4}, {"high", 7}}),
                        run("zero-ideal", zero, {{"low", 4}, {"high", 7}, {"cor", 6}}),
                        run("zero-nilpotent", zero, {{"r", 4}, {"low", 4}, {"high", 7}})});
       }},
      {10, "basis ranks at bound 6 and [A,B]-power round trip on 200 elements", 0,
       [&] {
         return suites({run("independence", sym, {{"bound", 6}}), run("independence", zero, {{"bound", 6}}),
                        run("grad-basis-roundtrip", sym, {{"samples", 200}, {"degree", 6}, {"seed", 1}})});
       }},
      {11, "theta criterion to length 10, regular-word counts 1..6", 0,
       [&] { return suites({run("theta-lie", sym, {{"len", 10}, {"count", 6}})}); }},
      {12, "confluence on all 2046 words of length <= 10", 60, confluence},
  };

  int failed = 0;
  std::printf("acceptance: tolerance exact (zero residual), q symbolic unless stated, %u threads\n", jobs());
  for (const Criterion &c : criteria) {
    const auto start = Clock::now();
    Verdict v = c.check();
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = c.limit_seconds == 0 || seconds < c.limit_seconds;
    const bool pass = v.pass && in_time;
    failed += !pass;
    char limit[32] = "no limit";
    if (c.limit_seconds > 0)
      std::snprintf(limit, sizeof limit, "limit %.0f s", c.limit_seconds);
    std::printf("criterion %2d %s  %s  [%.2f s, %s]  %s\n", c.number, pass ? "PASS" : "FAIL", c.title.c_str(),
                seconds, limit, v.detail.c_str());
    if (!pass)
      print_failures(v);
    std::fflush(stdout);
  }
  std::printf("acceptance: %d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
