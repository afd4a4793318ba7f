#include "geolang/fingerprint.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace geolang {

  namespace {

    // Subgroup generated by `gens`, as a membership mask.
    std::vector<bool> closure(FiniteGroupTable const& t,
                              std::vector<Element> const& gens) {
      std::vector<bool> in(t.order(), false);
      std::vector<Element> members{t.identity()};
      in[t.identity()] = true;
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (auto g : gens) {
          Element x = t.mul(members[i], g);
          if (!in[x]) {
            in[x] = true;
            members.push_back(x);
          }
        }
      }
      return in;
    }

    std::vector<std::uint64_t> primes_of(std::uint64_t m) {
      std::vector<std::uint64_t> ps;
      for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
          ps.push_back(p);
          while (m % p == 0) {
            m /= p;
          }
        }
      }
      if (m > 1) {
        ps.push_back(m);
      }
      return ps;
    }

    // Invariant factors of G/D for a normal subgroup D containing [G,G].
    std::vector<std::uint64_t> quotient_invariants(FiniteGroupTable const& t,
                                                   std::vector<bool> const& d) {
      std::size_t d_order = std::count(d.begin(), d.end(), true);
      std::uint64_t q = t.order() / d_order;
      // per prime, exponents of the cyclic p-factors, descending
      std::vector<std::vector<std::uint64_t>> factors;
      for (auto p : primes_of(q)) {
        std::vector<std::size_t> c{0};
        std::uint64_t pk = 1;
        std::size_t full = 0;
        std::uint64_t pa = 1;
        while (q % (pa * p) == 0) {
          pa *= p;
          ++full;
        }
        while (true) {
          pk *= p;
          std::size_t count = 0;
          for (Element g = 0; g < t.order(); ++g) {
            count += d[t.power(g, static_cast<std::int64_t>(pk))];
          }
          std::size_t cosets = count / d_order;
          std::size_t log = 0;
          for (std::size_t x = cosets; x > 1; x /= p) {
            ++log;
          }
          c.push_back(log);
          if (log == full) {
            break;
          }
        }
        std::vector<std::uint64_t> pf;
        for (std::size_t i = 1;; ++i) {
          std::uint64_t f = 1;
          for (std::size_t k = 1; k < c.size(); ++k) {
            if (c[k] - c[k - 1] >= i) {
              f *= p;
            }
          }
          if (f == 1) {
            break;
          }
          pf.push_back(f);
        }
        factors.push_back(std::move(pf));
      }
      std::vector<std::uint64_t> inv;
      for (std::size_t j = 0;; ++j) {
        std::uint64_t f = 1;
        for (auto const& pf : factors) {
          if (j < pf.size()) {
            f *= pf[j];
          }
        }
        if (f == 1) {
          break;
        }
        inv.push_back(f);
      }
      return inv;
    }

  }  // namespace

  std::size_t Fingerprint::exponent() const {
    std::size_t e = 1;
    for (auto const& [o, c] : order_histogram) {
      e = std::lcm(e, o);
    }
    return e;
  }

  Fingerprint fingerprint(FiniteGroupTable const& t) {
    Fingerprint f;
    std::size_t n = t.order();
    f.order = n;
    f.abelian = t.abelian();
    for (Element g = 0; g < n; ++g) {
      ++f.order_histogram[t.element_order(g)];
      bool central = true;
      for (Element h = 0; h < n && central; ++h) {
        central = t.mul(g, h) == t.mul(h, g);
      }
      f.center_order += central;
    }
    std::vector<bool> seen(n, false);
    std::vector<Element> commutators;
    for (Element g = 0; g < n; ++g) {
      for (Element h = 0; h < n; ++h) {
        Element c = t.mul(t.mul(g, h), t.inv(t.mul(h, g)));
        if (!seen[c]) {
          seen[c] = true;
          commutators.push_back(c);
        }
      }
    }
    auto derived = closure(t, commutators);
    f.derived_order = std::count(derived.begin(), derived.end(), true);
    f.abelianization = quotient_invariants(t, derived);
    return f;
  }

  std::vector<std::uint64_t> abelian_invariants(FiniteGroupTable const& t) {
    std::vector<bool> trivial(t.order(), false);
    trivial[t.identity()] = true;
    return quotient_invariants(t, trivial);
  }

  std::string to_string(Fingerprint const& f) {
    std::ostringstream out;
    out << "order=" << f.order << " abelian=" << (f.abelian ? "yes" : "no")
        << " orders={";
    bool first = true;
    for (auto const& [o, c] : f.order_histogram) {
      out << (first ? "" : ",") << o << ":" << c;
      first = false;
    }
    out << "} center=" << f.center_order << " ab=(";
    for (std::size_t i = 0; i < f.abelianization.size(); ++i) {
      out << (i ? "," : "") << f.abelianization[i];
    }
    out << ") derived=" << f.derived_order;
    return out.str();
  }

}  // namespace geolang
