#include <algorithm>
#include <array>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ybk/cli/run.hpp"
#include "ybk/modalg/group_ring.hpp"
#include "ybk/ybcore/constructors.hpp"
#include "ybk/vknots/coloring.hpp"

namespace ybk::cli {

namespace {

using modalg::BigInt;
using modalg::GroupRingElement;
using nlohmann::json;
using ybcore::CochainTable;
using ybcore::FiniteYBSet;

const std::array<const char*, 6> kKishino = {
    "s1 v1 s1^-1 s2 s1 v1 s1^-1 s2^-1",
    "s1 v1 s1^-1 s2 s1^-1 v1 s1 s2^-1",
    "s1^-1 v1 s1 s2 s1^-1 v1 s1 s2^-1",
    "s1 s1 v1 s1^-1 s1^-1 s2 s1 s1 v1 s1^-1 s1^-1 s2^-1",
    "s1 s1 v1 s1^-1 s1^-1 s2 s1^-1 s1^-1 v1 s1 s1 s2^-1",
    "s1^-1 s1^-1 v1 s1 s1 s2 s1^-1 s1^-1 v1 s1 s1 s2^-1",
};

struct Table1Row {
  int u;
  std::array<int, 6> counts;
};

const std::array<Table1Row, 7> kTable1 = {{
    {2, {225, 15, 75, 15, 15, 45}},
    {4, {15, 15, 45, 45, 15, 75}},
    {7, {75, 15, 225, 45, 15, 15}},
    {8, {45, 15, 15, 75, 15, 225}},
    {11, {45, 15, 15, 75, 15, 45}},
    {13, {15, 15, 45, 225, 15, 75}},
    {14, {45, 15, 15, 15, 15, 225}},
}};

GroupRingElement gr(std::int64_t m, std::vector<int> c) {
  std::vector<BigInt> v(static_cast<std::size_t>(m), 0);
  for (std::size_t i = 0; i < c.size(); ++i) v[i] = c[i];
  return GroupRingElement(m, std::move(v));
}

CochainTable z4_cocycle() {
  CochainTable f(2, 4, 4);
  auto put = [&](ybcore::Elem a, ybcore::Elem b, int v) { f.set(std::array{a, b}, v); };
  put(0, 1, 1), put(1, 1, 1), put(1, 2, 1), put(3, 3, 1);
  put(0, 2, 2);
  put(1, 0, 3), put(2, 1, 3), put(3, 0, 3), put(3, 2, 3);
  return f;
}

CochainTable z3_cocycle(int q1, int q2, int q3) {
  CochainTable f(2, 3, 3);
  auto put = [&](ybcore::Elem a, ybcore::Elem b, int v) { f.set(std::array{a, b}, v); };
  put(1, 0, q1), put(2, 2, q2), put(1, 1, q3);
  put(2, 0, -q1), put(0, 2, q1 - q3), put(0, 1, -q1 - q2);
  return f;
}

GroupRingElement expected_torus(int n) {
  if (n % 2 != 0) return gr(4, {4});
  if (n % 4 == 2) return gr(4, {4, 0, 4});
  switch (n % 16) {
    case 4: return gr(4, {8, 0, 0, 8});
    case 8: return gr(4, {8, 0, 8});
    case 12: return gr(4, {8, 8});
    default: return gr(4, {16});
  }
}

GroupRingElement expected_virtual(int n) {
  switch (n % 4) {
    case 1: return gr(4, {3, 1, 1, 3});
    case 2: return gr(4, {6, 2, 6, 2});
    case 3: return gr(4, {3, 3, 1, 1});
    default: return n % 8 == 4 ? gr(4, {12, 0, 4}) : gr(4, {16});
  }
}

GroupRingElement expected_z3(int n) { return n % 3 == 0 ? gr(3, {3}) : gr(3, {1, 1, 1}); }

std::string repeat(const std::string& tok, int n) {
  std::string s;
  for (int i = 0; i < n; ++i) s += (i ? " " : "") + tok;
  return s;
}

class Report {
 public:
  Report(bool json, std::ostream& out) : json_(json), out_(out) {}

  void value(const std::string& label, const std::string& word, const GroupRingElement& got,
             const GroupRingElement& want) {
    const bool ok = got == want;
    all_ok_ = all_ok_ && ok;
    if (json_) {
      rows_.push_back({{"label", label}, {"word", word}, {"value", modalg::to_json(got)},
                       {"expected", modalg::to_json(want)}, {"match", ok}});
    } else {
      out_ << label << "  " << modalg::render(got) << (ok ? "" : "   MISMATCH, expected " + modalg::render(want))
           << '\n';
    }
  }

  void row(const json& j, const std::string& text, bool ok) {
    all_ok_ = all_ok_ && ok;
    if (json_) rows_.push_back(j);
    else out_ << text << '\n';
  }

  int finish(const std::string& target) {
    if (json_) out_ << json{{"target", target}, {"rows", rows_}, {"match", all_ok_}}.dump(2) << '\n';
    else out_ << (all_ok_ ? "all values match\n" : "MISMATCH\n");
    return all_ok_ ? kOk : kCheckFailed;
  }

 private:
  bool json_;
  std::ostream& out_;
  json rows_ = json::array();
  bool all_ok_ = true;
};

void table1(Report& rep, unsigned threads, bool json_mode) {
  vknots::ScanOptions opt;
  opt.threads = threads;
  if (!json_mode) rep.row({}, "u     K1   K2   K3   K4   K5   K6", true);
  for (const auto& r : kTable1) {
    const FiniteYBSet x = ybcore::make_affine({15, 4, 11, r.u});
    std::array<std::uint64_t, 6> got{};
    bool ok = true;
    std::ostringstream text;
    text << std::left << std::setw(3) << r.u << std::right;
    for (std::size_t i = 0; i < kKishino.size(); ++i) {
      got[i] = vknots::count_colorings(x, vknots::parse_braid(kKishino[i]), opt);
      ok = ok && got[i] == static_cast<std::uint64_t>(r.counts[i]);
      text << std::setw(5) << got[i];
    }
    if (!ok) {
      text << "   MISMATCH, expected";
      for (int c : r.counts) text << ' ' << c;
    }
    rep.row({{"u", r.u}, {"counts", got}, {"expected", r.counts}, {"match", ok}}, text.str(), ok);
  }
}

void torus(Report& rep, int from, int to, const vknots::ScanOptions& opt) {
  const FiniteYBSet x = ybcore::make_affine({4, 1, -1, -1});
  const CochainTable psi = z4_cocycle();
  for (int n = from; n <= to; ++n) {
    const std::string w = "s1^" + std::to_string(n);
    rep.value("n=" + std::to_string(n), w, vknots::state_sum(x, psi, vknots::parse_braid(w), opt), expected_torus(n));
  }
  // Mirror image: the value at -4 differs from the value at 4.
  rep.value("n=-4", "s1^-4", vknots::state_sum(x, psi, vknots::parse_braid("s1^-4"), opt), gr(4, {8, 8}));
}

void virtual_family(Report& rep, int from, int to, const vknots::ScanOptions& opt) {
  const FiniteYBSet x = ybcore::make_affine({4, 1, -1, -1});
  const CochainTable psi = z4_cocycle();
  for (int n = from; n <= to; ++n) {
    const std::string w = repeat("s1 v1", n);
    rep.value("n=" + std::to_string(n), w, vknots::state_sum(x, psi, vknots::parse_braid(w, 2), opt),
              expected_virtual(n));
  }
}

void z3_family(Report& rep, int from, int to, const vknots::ScanOptions& opt) {
  const FiniteYBSet x = ybcore::make_affine({3, 1, 2, 2});
  const CochainTable psi = z3_cocycle(1, 0, 0);
  for (int n = from; n <= to; ++n) {
    const std::string w = (n > 0 ? "s1^" + std::to_string(n) + " " : "") + "v1";
    rep.value("n=" + std::to_string(n), w, vknots::state_sum(x, psi, vknots::parse_braid(w), opt), expected_z3(n));
  }
}

void borromean(Report& rep, const vknots::ScanOptions& opt) {
  const FiniteYBSet x = ybcore::make_affine({4, 1, -1, -1});
  const std::string w = repeat("s1^-1 s2", 3);
  rep.value("borromean", w, vknots::state_sum(x, z4_cocycle(), vknots::parse_braid(w), opt), gr(4, {16, 0, 48}));
}

}  // namespace

int reproduce(const std::string& target, int from, int to, bool json_mode, unsigned threads, std::ostream& out,
              std::ostream& err) {
  vknots::ScanOptions opt;
  opt.threads = threads;
  Report rep(json_mode, out);
  auto range = [&](int lo, int hi) { return std::pair{from >= 0 ? from : lo, to >= 0 ? to : hi}; };
  if (target == "table1") {
    table1(rep, threads, json_mode);
  } else if (target == "torus") {
    auto [a, b] = range(1, 16);
    if (a < 1) a = 1;
    torus(rep, a, b, opt);
  } else if (target == "virtual") {
    auto [a, b] = range(1, 8);
    if (a < 1) a = 1;
    virtual_family(rep, a, b, opt);
  } else if (target == "z3") {
    auto [a, b] = range(0, 6);
    z3_family(rep, a, b, opt);
  } else if (target == "borromean") {
    borromean(rep, opt);
  } else if (target == "all") {
    int worst = kOk;
    for (const char* t : {"table1", "torus", "virtual", "z3", "borromean"}) {
      if (!json_mode) out << "== " << t << '\n';
      worst = std::max(worst, reproduce(t, -1, -1, json_mode, threads, out, err));
    }
    return worst;
  } else {
    err << "unknown reproduce target '" << target << "' (table1, torus, virtual, z3, borromean, all)\n";
    return kUsage;
  }
  return rep.finish(target);
}

}  // namespace ybk::cli
