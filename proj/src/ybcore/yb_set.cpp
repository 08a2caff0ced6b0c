#include "ybk/ybcore/yb_set.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "ybk/common/error.hpp"
#include "ybk/simd/kernels.hpp"

namespace ybk::ybcore {

FiniteYBSet::FiniteYBSet(std::uint32_t size, std::vector<Elem> r1, std::vector<Elem> r2)
    : size_(size), r1_(std::move(r1)), r2_(std::move(r2)) {
  if (size_ == 0) throw Error(ErrorKind::Format, "YB set must be non-empty");
  if (size_ > 46340) throw Error(ErrorKind::Format, "YB set too large for pair tables");
  const std::size_t n2 = static_cast<std::size_t>(size_) * size_;
  if (r1_.size() != n2 || r2_.size() != n2) {
    throw Error(ErrorKind::Format, "R tables must have size*size entries");
  }
  auto in_range = [this](Elem e) { return e < size_; };
  if (!std::all_of(r1_.begin(), r1_.end(), in_range) || !std::all_of(r2_.begin(), r2_.end(), in_range)) {
    throw Error(ErrorKind::Format, "R table entry out of range");
  }
}

YbeReport verify_ybe(const FiniteYBSet& x, unsigned threads) {
  const std::uint32_t n = x.size();
  const auto isa = simd::active_isa();
  threads = std::clamp<unsigned>(threads, 1, n);

  std::vector<std::optional<simd::Triple>> found(threads);
  auto work = [&](unsigned w) {
    const std::uint32_t lo = static_cast<std::uint32_t>(std::uint64_t{n} * w / threads);
    const std::uint32_t hi = static_cast<std::uint32_t>(std::uint64_t{n} * (w + 1) / threads);
    found[w] = simd::first_ybe_failure(n, x.r1_table(), x.r2_table(), lo, hi, isa);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }

  YbeReport report;
  // Workers cover increasing x ranges, so the first hit in worker order is the lexicographic minimum.
  for (const auto& f : found) {
    if (f) {
      report.first_failure = *f;
      break;
    }
  }
  report.holds = !report.first_failure;
  return report;
}

BirackReport verify_birack(const FiniteYBSet& x) {
  const std::uint32_t n = x.size();
  const std::size_t n2 = static_cast<std::size_t>(n) * n;
  BirackReport report;

  std::vector<std::size_t> preimage(n2, n2);
  bool bijective = true;
  for (Elem a = 0; a < n && bijective; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const std::size_t image = x.pair(x.r1(a, b), x.r2(a, b));
      if (preimage[image] != n2) {
        bijective = false;
        break;
      }
      preimage[image] = x.pair(a, b);
    }
  }
  report.invertible = bijective;
  if (bijective) {
    report.rbar1.resize(n2);
    report.rbar2.resize(n2);
    for (std::size_t image = 0; image < n2; ++image) {
      report.rbar1[image] = static_cast<Elem>(preimage[image] / n);
      report.rbar2[image] = static_cast<Elem>(preimage[image] % n);
    }
  }

  std::vector<char> seen(n);
  report.left_invertible = true;
  for (Elem a = 0; a < n && report.left_invertible; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem b = 0; b < n; ++b) {
      Elem v = x.r1(a, b);
      if (seen[v]) {
        report.left_invertible = false;
        break;
      }
      seen[v] = 1;
    }
  }
  report.right_invertible = true;
  for (Elem b = 0; b < n && report.right_invertible; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem a = 0; a < n; ++a) {
      Elem v = x.r2(a, b);
      if (seen[v]) {
        report.right_invertible = false;
        break;
      }
      seen[v] = 1;
    }
  }
  return report;
}

BiquandleWitness biquandle_witness(const FiniteYBSet& x) {
  const std::uint32_t n = x.size();
  BiquandleWitness w;
  w.x_of.resize(n);
  w.y_of.resize(n);
  for (Elem a = 0; a < n; ++a) {
    int x_hits = 0, y_hits = 0;
    for (Elem c = 0; c < n; ++c) {
      if (x.r1(c, a) == c && x.r2(c, a) == a) {
        w.x_of[a] = c;
        ++x_hits;
      }
      if (x.r2(a, c) == c && x.r1(a, c) == a) {
        w.y_of[a] = c;
        ++y_hits;
      }
    }
    if (x_hits != 1 || y_hits != 1) {
      throw Error(ErrorKind::NotBiquandle,
                  "element " + std::to_string(a) + ": " + std::to_string(x_hits) +
                      " solutions of R(x,a)=(x,a), " + std::to_string(y_hits) +
                      " solutions of R(a,y)=(a,y)");
    }
  }
  return w;
}

FiniteYBSet finalize(FiniteYBSet x, unsigned threads) {
  x.flags_ = {};
  x.rbar1_.clear();
  x.rbar2_.clear();
  x.flags_.ybe = verify_ybe(x, threads).holds;
  BirackReport b = verify_birack(x);
  if (b.invertible) {
    x.rbar1_ = std::move(b.rbar1);
    x.rbar2_ = std::move(b.rbar2);
  }
  x.flags_.birack = x.flags_.ybe && b.invertible && b.left_invertible && b.right_invertible;
  if (x.flags_.birack) {
    try {
      (void)biquandle_witness(x);
      x.flags_.biquandle = true;
    } catch (const Error&) {
      x.flags_.biquandle = false;
    }
  }
  return x;
}

FiniteYBSet make_swap(std::uint32_t size) {
  std::vector<Elem> r1(static_cast<std::size_t>(size) * size), r2(r1.size());
  for (Elem a = 0; a < size; ++a) {
    for (Elem b = 0; b < size; ++b) {
      r1[static_cast<std::size_t>(a) * size + b] = b;
      r2[static_cast<std::size_t>(a) * size + b] = a;
    }
  }
  return finalize(FiniteYBSet(size, std::move(r1), std::move(r2)));
}

}  // namespace ybk::ybcore
