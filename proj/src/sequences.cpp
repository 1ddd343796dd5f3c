#include "apolar/sequences.hpp"

#include <algorithm>
#include <cstdlib>

#include "apolar/errors.hpp"

namespace apolar {

namespace {

long binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  long r = 1;
  for (long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

}  // namespace

long macaulay_bound(long c, int i) {
  if (i < 1) throw PreconditionFailed("Macaulay bound needs i >= 1");
  long out = 0;
  for (int k = i; k >= 1 && c > 0; --k) {
    long a = k;
    while (binomial(a + 1, k) <= c) ++a;
    c -= binomial(a, k);
    out += binomial(a + 1, k + 1);
  }
  return out;
}

bool is_o_sequence(const HSeq& h) {
  if (h.empty() || h[0] != 1) return false;
  for (std::size_t i = 1; i + 1 < h.size(); ++i) {
    if (h[i + 1] > macaulay_bound(h[i], static_cast<int>(i))) return false;
  }
  return true;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::TypeI: return "TypeI";
    case Verdict::TypeII: return "TypeII";
    case Verdict::TypeIII: return "TypeIII";
    case Verdict::NotGorenstein: return "NotGorenstein";
    case Verdict::NotOSequence: return "NotOSequence";
    case Verdict::OutOfScope: return "OutOfScope";
  }
  return "?";
}

Classification classify_133(const HSeq& h) {
  Classification c;
  auto reject = [&](Verdict v, std::string why) {
    c.verdict = v;
    c.reason = std::move(why);
    return c;
  };
  if (!h.starts_133()) return reject(Verdict::OutOfScope, "h does not start with 1,3,3");
  if (!is_o_sequence(h)) return reject(Verdict::NotOSequence, "h violates Macaulay's bound");
  const int s = h.socle_degree();
  if (h[static_cast<std::size_t>(s)] != 1) return reject(Verdict::NotGorenstein, "last entry h_s is not 1");

  if (h[3] <= 3) {
    // From degree 2 on the sequence is non-increasing with values in {3, 2, 1}.
    int u = 0, v = 0, ones = 0;
    for (int i = 3; i <= s; ++i) {
      int x = h[static_cast<std::size_t>(i)];
      if (x == 3) ++u;
      if (x == 2) ++v;
      if (x == 1) ++ones;
    }
    c.verdict = Verdict::TypeI;
    c.uvw = {u, v, ones - 1};
    c.reason = "h_3 <= 3";
    return c;
  }

  c.d = h.max();
  c.r = h.max_repeats();
  c.peak = h.peak().value_or(s);
  const int delta = h.delta();
  if (delta == 1) {
    c.verdict = Verdict::TypeII;
    c.reason = "h_3 = 4 and Delta(h) = 1";
    return c;
  }
  if (delta > 2) return reject(Verdict::NotGorenstein, "Delta(h) = " + std::to_string(delta) + " > 2");

  std::vector<int> by_two;
  for (auto [i, m] : h.falls()) {
    if (m == 2) by_two.push_back(i);
  }
  if (by_two.size() != 1) return reject(Verdict::NotGorenstein, "fall by two is not unique");
  if (by_two.front() != c.peak) {
    return reject(Verdict::NotGorenstein, "fall by two at position " + std::to_string(by_two.front()) +
                                              " is not at the peak position " + std::to_string(c.peak));
  }
  const int d = c.d;
  const int r = c.r;
  for (int i = 2; i <= s; ++i) {
    int x = h[static_cast<std::size_t>(i)];
    bool ok = true;
    if (i <= d - 2) {
      ok = x == i + 1;
    } else if (i <= d + r - 1) {
      ok = x == d;
    } else if (i == d + r) {
      ok = x == d - 2;
    } else {
      int step = h[static_cast<std::size_t>(i - 1)] - x;
      ok = step == 0 || step == 1;
    }
    if (!ok) return reject(Verdict::NotGorenstein, "h departs from the type III template at position " + std::to_string(i));
  }
  c.verdict = Verdict::TypeIII;
  c.reason = "h_3 = 4, Delta(h) = 2, unique fall by two at the peak";
  return c;
}

bool codim2_gorenstein_check(const HSeq& h, Codim2Mode mode) {
  auto single = [](const HSeq& g) {
    if (g.empty() || g[0] != 1 || g[1] > 2) return false;
    if (!is_o_sequence(g)) return false;
    if (g[static_cast<std::size_t>(g.socle_degree())] != 1) return false;
    for (std::size_t i = 1; i < g.size(); ++i) {
      if (std::abs(g[i] - g[i - 1]) > 1) return false;
    }
    return true;
  };
  if (single(h)) return true;
  if (mode == Codim2Mode::SingleF) return false;
  if (h.empty() || h[0] != 1 || h[1] > 2 || !is_o_sequence(h)) return false;
  auto t = h.peak();
  if (!t) return false;
  return single(h.with(static_cast<std::size_t>(*t), h[static_cast<std::size_t>(*t)] - 1));
}

std::vector<int> codim2_right_ends(const HSeq& h2) {
  if (!codim2_gorenstein_check(h2)) throw PreconditionFailed("(" + h2.to_string() + ") is not a codimension two Gorenstein sequence");
  const int t = h2.max();
  std::vector<int> ends;
  for (int j = 0; j <= h2.socle_degree(); ++j) {
    const auto jj = static_cast<std::size_t>(j);
    int count = (j + 1 <= t - 1 ? 1 : 0) - (h2[jj + 1] - h2[jj]);
    if (count < 0) throw PreconditionFailed("negative block count in (" + h2.to_string() + ")");
    ends.insert(ends.end(), static_cast<std::size_t>(count), j);
  }
  std::sort(ends.rbegin(), ends.rend());
  if (static_cast<int>(ends.size()) != t) throw VerificationFailure("block extraction lost a block");
  return ends;
}

std::vector<HSeq> enumerate_133(int max_socle) {
  std::vector<HSeq> out;
  std::vector<int> cur{1, 3, 3};
  std::function<void()> rec = [&] {
    out.emplace_back(cur);
    int i = static_cast<int>(cur.size()) - 1;
    if (i >= max_socle) return;
    long bound = macaulay_bound(cur.back(), i);
    for (long next = 1; next <= bound; ++next) {
      cur.push_back(static_cast<int>(next));
      rec();
      cur.pop_back();
    }
  };
  if (max_socle >= 2) rec();
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace apolar
