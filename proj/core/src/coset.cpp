#include "geolang/coset.hpp"

#include <deque>

#include "geolang/errors.hpp"

namespace geolang {

  ToddCoxeter::ToddCoxeter(Presentation p, std::size_t max_cosets)
      : p_(std::move(p)),
        cap_(max_cosets),
        cols_(p_.alphabet.size()),
        table_(cols_, undefined),
        parent_{0} {
    if (cap_ == 0) {
      throw InputError("coset cap must be positive");
    }
  }

  std::size_t ToddCoxeter::rep(std::size_t c) const {
    std::size_t r = c;
    while (parent_[r] != r) {
      r = parent_[r];
    }
    while (parent_[c] != r) {
      std::size_t next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  std::size_t ToddCoxeter::live_cosets() const {
    std::size_t n = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      n += live(c);
    }
    return n;
  }

  void ToddCoxeter::define(std::size_t c, std::size_t x) {
    if (parent_.size() >= cap_) {
      throw CapHit{};
    }
    std::size_t d = parent_.size();
    parent_.push_back(d);
    table_.resize(table_.size() + cols_, undefined);
    entry(c, x) = static_cast<std::int32_t>(d);
    entry(d, inv(x)) = static_cast<std::int32_t>(c);
    changed_ = true;
  }

  void ToddCoxeter::scan_and_fill(std::size_t c, Word const& w) {
    std::size_t f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    while (true) {
      while (i <= j && entry(f, w[i]) != undefined) {
        f = entry(f, w[i]);
        ++i;
      }
      if (i > j) {
        if (f != b) {
          coincidence(f, b);
        }
        return;
      }
      while (j >= i && entry(b, inv(w[j])) != undefined) {
        b = entry(b, inv(w[j]));
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        entry(f, w[i]) = static_cast<std::int32_t>(b);
        entry(b, inv(w[i])) = static_cast<std::int32_t>(f);
        changed_ = true;
        return;
      }
      define(f, w[i]);
    }
  }

  void ToddCoxeter::merge(std::size_t a,
                          std::size_t b,
                          std::vector<std::size_t>& q) {
    std::size_t x = rep(a), y = rep(b);
    if (x == y) {
      return;
    }
    std::size_t lo = std::min(x, y), hi = std::max(x, y);
    parent_[hi] = lo;
    q.push_back(hi);
  }

  void ToddCoxeter::coincidence(std::size_t a, std::size_t b) {
    changed_ = true;
    std::vector<std::size_t> q;
    merge(a, b, q);
    for (std::size_t qi = 0; qi < q.size(); ++qi) {
      std::size_t g = q[qi];
      for (std::size_t x = 0; x < cols_; ++x) {
        std::int32_t d = entry(g, x);
        if (d == undefined) {
          continue;
        }
        entry(d, inv(x)) = undefined;
        std::size_t mu = rep(g), nu = rep(d);
        if (entry(mu, x) != undefined) {
          merge(nu, entry(mu, x), q);
        } else if (entry(nu, inv(x)) != undefined) {
          merge(mu, entry(nu, inv(x)), q);
        } else {
          entry(mu, x) = static_cast<std::int32_t>(nu);
          entry(nu, inv(x)) = static_cast<std::int32_t>(mu);
        }
      }
    }
  }

  bool ToddCoxeter::pass() {
    changed_ = false;
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      for (auto const& r : p_.relators) {
        if (!live(c)) {
          break;
        }
        scan_and_fill(c, r);
      }
      for (std::size_t x = 0; x < cols_ && live(c); ++x) {
        if (entry(c, x) == undefined) {
          define(c, x);
        }
      }
    }
    return changed_;
  }

  bool ToddCoxeter::relators_close() const {
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!live(c)) {
        continue;
      }
      for (std::size_t x = 0; x < cols_; ++x) {
        if (entry(c, x) == undefined || !live(entry(c, x))) {
          return false;
        }
      }
      for (auto const& r : p_.relators) {
        std::size_t f = c;
        for (auto x : r) {
          f = entry(f, x);
        }
        if (f != c) {
          return false;
        }
      }
    }
    return true;
  }

  bool ToddCoxeter::run() {
    if (complete_) {
      return true;
    }
    try {
      // One HLT pass normally closes the table; a further pass confirms it.
      while (pass()) {
      }
      if (!relators_close()) {
        throw std::logic_error("coset table failed to close");
      }
      complete_ = true;
    } catch (CapHit const&) {
      complete_ = false;
    }
    return complete_;
  }

  FiniteGroupTable ToddCoxeter::table() const {
    if (!complete_) {
      throw std::logic_error("coset table is not complete");
    }
    std::vector<std::int64_t> index(parent_.size(), -1);
    std::vector<std::size_t> cosets{0};
    std::vector<std::size_t> tree_parent{0};
    std::vector<std::size_t> tree_letter{0};
    index[0] = 0;
    for (std::size_t i = 0; i < cosets.size(); ++i) {
      for (std::size_t x = 0; x < cols_; ++x) {
        std::size_t d = entry(cosets[i], x);
        if (index[d] < 0) {
          index[d] = static_cast<std::int64_t>(cosets.size());
          cosets.push_back(d);
          tree_parent.push_back(i);
          tree_letter.push_back(x);
        }
      }
    }
    std::size_t n = cosets.size();
    std::vector<Element> mult(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      mult[i * n] = static_cast<Element>(i);
      for (std::size_t j = 1; j < n; ++j) {
        std::size_t left = mult[i * n + tree_parent[j]];
        mult[i * n + j]
            = static_cast<Element>(index[entry(cosets[left], tree_letter[j])]);
      }
    }
    std::vector<TableGenerator> gens;
    for (std::size_t g = 0; g < p_.generators.size(); ++g) {
      gens.push_back({p_.generators[g],
                      static_cast<Element>(index[entry(0, 2 * g)])});
    }
    return FiniteGroupTable(n, std::move(mult), std::move(gens));
  }

  std::optional<std::vector<std::size_t>> ToddCoxeter::sphere_sizes(
      std::size_t radius) const {
    std::vector<std::size_t> sizes{1};
    std::vector<std::int64_t> dist(parent_.size(), -1);
    std::vector<std::size_t> frontier{rep(0)};
    dist[frontier[0]] = 0;
    for (std::size_t r = 1; r <= radius; ++r) {
      std::vector<std::size_t> next;
      for (auto c : frontier) {
        for (std::size_t x = 0; x < cols_; ++x) {
          if (entry(c, x) == undefined) {
            return std::nullopt;
          }
          std::size_t d = rep(entry(c, x));
          if (dist[d] < 0) {
            dist[d] = static_cast<std::int64_t>(r);
            next.push_back(d);
          }
        }
      }
      sizes.push_back(next.size());
      frontier = std::move(next);
    }
    return sizes;
  }

  CosetResult coset_enumerate(Presentation const& p, std::size_t max_cosets) {
    ToddCoxeter tc(p, max_cosets);
    if (tc.run()) {
      return tc.table();
    }
    return CapExceeded{max_cosets, tc.live_cosets()};
  }

}  // namespace geolang
