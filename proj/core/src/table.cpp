#include "geolang/table.hpp"

#include <charconv>
#include <deque>
#include <istream>
#include <ostream>
#include <random>
#include <unordered_map>

#include "geolang/errors.hpp"

namespace geolang {

  FiniteGroupTable::FiniteGroupTable(std::size_t order,
                                     std::vector<Element> mult,
                                     std::vector<TableGenerator> generators)
      : order_(order),
        mult_(std::move(mult)),
        inv_(order),
        id_(0),
        generators_(std::move(generators)) {
    if (order_ == 0) {
      throw InputError("group table of order 0");
    }
    if (mult_.size() != order_ * order_) {
      throw InputError("multiplication table has the wrong size");
    }
    for (auto x : mult_) {
      if (x >= order_) {
        throw InputError("multiplication table entry out of range");
      }
    }
    bool found = false;
    for (Element e = 0; e < order_ && !found; ++e) {
      bool ok = true;
      for (Element x = 0; x < order_ && ok; ++x) {
        ok = mul(e, x) == x && mul(x, e) == x;
      }
      if (ok) {
        id_ = e;
        found = true;
      }
    }
    if (!found) {
      throw InputError("multiplication table has no identity");
    }
    for (Element x = 0; x < order_; ++x) {
      bool ok = false;
      for (Element y = 0; y < order_; ++y) {
        if (mul(x, y) == id_ && mul(y, x) == id_) {
          inv_[x] = y;
          ok = true;
          break;
        }
      }
      if (!ok) {
        throw InputError("element " + std::to_string(x) + " has no inverse");
      }
    }
    auto assoc = [&](Element a, Element b, Element c) {
      if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
        throw InputError("multiplication table is not associative");
      }
    };
    if (order_ <= 64) {
      for (Element a = 0; a < order_; ++a) {
        for (Element b = 0; b < order_; ++b) {
          for (Element c = 0; c < order_; ++c) {
            assoc(a, b, c);
          }
        }
      }
    } else {
      std::mt19937_64 rng(0x5eed);
      std::uniform_int_distribution<Element> pick(0, order_ - 1);
      for (int i = 0; i < 20000; ++i) {
        assoc(pick(rng), pick(rng), pick(rng));
      }
    }

    std::vector<Letter> letters;
    for (auto const& g : generators_) {
      if (g.element >= order_) {
        throw InputError("generator " + g.name + " out of range");
      }
      if (mul(g.element, g.element) == id_) {
        letters.push_back({g.name, g.name});
        letter_elements_.push_back(g.element);
      } else {
        letters.push_back({g.name, g.name + "^-1"});
        letters.push_back({g.name + "^-1", g.name});
        letter_elements_.push_back(g.element);
        letter_elements_.push_back(inv_[g.element]);
      }
    }
    alphabet_ = Alphabet(std::move(letters));

    names_.assign(order_, Word{});
    std::vector<bool> seen(order_, false);
    std::deque<Element> queue{id_};
    seen[id_] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
      Element g = queue.front();
      queue.pop_front();
      for (LetterId a = 0; a < alphabet_.size(); ++a) {
        Element h = mul(g, letter_elements_[a]);
        if (!seen[h]) {
          seen[h] = true;
          names_[h] = names_[g];
          names_[h].push_back(a);
          queue.push_back(h);
          ++reached;
        }
      }
    }
    if (reached != order_) {
      throw NotGenerating("table generators reach " + std::to_string(reached)
                          + " of " + std::to_string(order_) + " elements");
    }
  }

  Element FiniteGroupTable::power(Element a, std::int64_t e) const {
    Element base = e < 0 ? inv_[a] : a;
    std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1
                            : static_cast<std::uint64_t>(e);
    n %= element_order(a);
    Element r = id_;
    for (std::uint64_t i = 0; i < n; ++i) {
      r = mul(r, base);
    }
    return r;
  }

  std::size_t FiniteGroupTable::element_order(Element a) const {
    std::size_t k = 1;
    for (Element x = a; x != id_; x = mul(x, a)) {
      ++k;
    }
    return k;
  }

  bool FiniteGroupTable::abelian() const {
    for (Element a = 0; a < order_; ++a) {
      for (Element b = a + 1; b < order_; ++b) {
        if (mul(a, b) != mul(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  std::string FiniteGroupTable::name_text(Element a) const {
    return format_word(names_.at(a), alphabet_);
  }

  void FiniteGroupTable::write(std::ostream& out) const {
    out << "order " << order_ << '\n';
    for (Element a = 0; a < order_; ++a) {
      for (Element b = 0; b < order_; ++b) {
        out << (b == 0 ? "" : " ") << mul(a, b);
      }
      out << '\n';
    }
  }

  std::vector<Element> FiniteGroupTable::read_mult(std::istream& in,
                                                   std::size_t& order) {
    std::string word;
    if (!(in >> word) || word != "order" || !(in >> order) || order == 0) {
      throw InputError("table file must start with \"order N\"");
    }
    std::vector<Element> mult(order * order);
    for (auto& x : mult) {
      if (!(in >> x)) {
        throw InputError("table file truncated");
      }
    }
    return mult;
  }

  ////////////////////////////////////////////////////////////////////////
  // TableEngine
  ////////////////////////////////////////////////////////////////////////

  TableEngine::TableEngine(TablePtr table, std::string label)
      : table_(std::move(table)), label_(std::move(label)) {
    std::vector<Key> keys;
    for (auto e : table_->letter_elements()) {
      keys.push_back(key_of(e));
    }
    set_letters(table_->alphabet(), std::move(keys));
  }

  std::string TableEngine::describe() const {
    return label_ + " (order " + std::to_string(table_->order()) + ")";
  }

  Key TableEngine::identity_key() const {
    return key_of(table_->identity());
  }

  Element TableEngine::element_of(Key const& k) const {
    Element e = 0;
    auto [p, ec] = std::from_chars(k.data(), k.data() + k.size(), e);
    if (ec != std::errc() || p != k.data() + k.size()
        || e >= table_->order()) {
      throw InputError("bad table key: " + k);
    }
    return e;
  }

  Key TableEngine::multiply(Key const& g, Key const& h) const {
    return key_of(table_->mul(element_of(g), element_of(h)));
  }

  Key TableEngine::inverse(Key const& g) const {
    return key_of(table_->inv(element_of(g)));
  }

  FiniteGroupTable direct_product(FiniteGroupTable const& t1,
                                  FiniteGroupTable const& t2) {
    std::size_t n1 = t1.order(), n2 = t2.order(), n = n1 * n2;
    auto idx = [n2](Element a, Element b) {
      return static_cast<Element>(a * n2 + b);
    };
    std::vector<Element> mult(n * n);
    for (Element a1 = 0; a1 < n1; ++a1) {
      for (Element a2 = 0; a2 < n2; ++a2) {
        for (Element b1 = 0; b1 < n1; ++b1) {
          for (Element b2 = 0; b2 < n2; ++b2) {
            mult[idx(a1, a2) * n + idx(b1, b2)]
                = idx(t1.mul(a1, b1), t2.mul(a2, b2));
          }
        }
      }
    }
    std::vector<TableGenerator> gens;
    for (auto const& g : t1.generators()) {
      gens.push_back({g.name + "_1", idx(g.element, t2.identity())});
    }
    for (auto const& g : t2.generators()) {
      gens.push_back({g.name + "_2", idx(t1.identity(), g.element)});
    }
    return FiniteGroupTable(n, std::move(mult), std::move(gens));
  }

  FiniteGroupTable table_from_engine(GroupEngine const& engine) {
    auto const& letters = engine.builtin_letters();
    std::vector<Key> elements{engine.identity_key()};
    std::unordered_map<Key, Element> index{{elements[0], 0}};
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (LetterId a = 0; a < letters.size(); ++a) {
        Key h = engine.act(elements[i], a);
        if (index.emplace(h, static_cast<Element>(elements.size())).second) {
          elements.push_back(std::move(h));
          if (elements.size() > 100000) {
            throw ResourceCap("engine too large to tabulate");
          }
        }
      }
    }
    std::size_t n = elements.size();
    std::vector<Element> mult(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        mult[i * n + j] = index.at(engine.multiply(elements[i], elements[j]));
      }
    }
    std::vector<TableGenerator> gens;
    for (LetterId a = 0; a < letters.size(); ++a) {
      if (letters.inverse(a) >= a) {
        gens.push_back({letters[a].name, index.at(engine.letter_key(a))});
      }
    }
    return FiniteGroupTable(n, std::move(mult), std::move(gens));
  }

}  // namespace geolang
