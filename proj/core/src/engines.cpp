#include "geolang/engines.hpp"

#include <numeric>
#include <sstream>

#include "geolang/errors.hpp"

namespace geolang {

  namespace {

    BigInt parse_int(std::string_view s, Key const& key) {
      if (s.empty()) {
        throw InputError("malformed key: " + key);
      }
      std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
      if (start == s.size()) {
        throw InputError("malformed key: " + key);
      }
      for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') {
          throw InputError("malformed key: " + key);
        }
      }
      BigInt v(std::string(s.substr(start)));
      return s[0] == '-' ? BigInt(-v) : v;
    }

    // Strips the bracket pair around `k` and splits the inside at `sep`.
    std::vector<std::string_view> split_inner(Key const& k,
                                              char open,
                                              char close,
                                              char sep) {
      if (k.size() < 2 || k.front() != open || k.back() != close) {
        throw InputError("malformed key: " + k);
      }
      std::string_view inner(k.data() + 1, k.size() - 2);
      std::vector<std::string_view> parts;
      std::size_t start = 0;
      for (std::size_t i = 0; i <= inner.size(); ++i) {
        if (i == inner.size() || inner[i] == sep) {
          parts.push_back(inner.substr(start, i - start));
          start = i + 1;
        }
      }
      return parts;
    }

    std::vector<std::string_view> split(std::string_view s, char sep) {
      std::vector<std::string_view> parts;
      if (s.empty()) {
        return parts;
      }
      std::size_t start = 0;
      for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
          parts.push_back(s.substr(start, i - start));
          start = i + 1;
        }
      }
      return parts;
    }

    // Non-negative residue of j modulo m > 0.
    std::uint64_t residue(BigInt const& j, std::uint64_t m) {
      BigInt r = j % m;
      if (r < 0) {
        r += m;
      }
      return static_cast<std::uint64_t>(r);
    }

    std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
      unsigned __int128 r = 1 % m, x = b % m;
      while (e > 0) {
        if (e & 1) {
          r = r * x % m;
        }
        x = x * x % m;
        e >>= 1;
      }
      return static_cast<std::uint64_t>(r);
    }

    void push_power(Word& w, BigInt const& e, LetterId pos, LetterId neg) {
      BigInt n = e < 0 ? BigInt(-e) : e;
      if (n > 1000000) {
        throw ResourceCap("normal form too long");
      }
      for (BigInt i = 0; i < n; ++i) {
        w.push_back(e < 0 ? neg : pos);
      }
    }

    std::string join_ints(std::vector<BigInt> const& v) {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != 0) {
          out += ',';
        }
        out += v[i].str();
      }
      return out;
    }

  }  // namespace

  std::string Phi::describe() const {
    if (kind == Kind::invert) {
      return "invert " + std::to_string(i);
    }
    return "swap " + std::to_string(i) + " " + std::to_string(j);
  }

  ////////////////////////////////////////////////////////////////////////
  // ZnC2Engine
  ////////////////////////////////////////////////////////////////////////

  ZnC2Engine::ZnC2Engine(std::size_t n, Phi phi) : n_(n), phi_(phi) {
    if (n_ == 0) {
      throw BadParams("rank must be positive");
    }
    bool ok = phi_.i >= 1 && phi_.i <= n_;
    if (phi_.kind == Phi::Kind::swap) {
      ok = ok && phi_.j >= 1 && phi_.j <= n_ && phi_.j != phi_.i;
    }
    if (!ok) {
      throw BadParams("bad involution for rank " + std::to_string(n_) + ": "
                      + phi_.describe());
    }
    std::vector<Letter> letters;
    std::vector<Key> keys;
    for (std::size_t k = 1; k <= n_; ++k) {
      std::string x = "x" + std::to_string(k);
      letters.push_back({x, x + "^-1"});
      letters.push_back({x + "^-1", x});
      Elem e{std::vector<BigInt>(n_, 0), false};
      e.m[k - 1] = 1;
      keys.push_back(encode(e));
      e.m[k - 1] = -1;
      keys.push_back(encode(e));
    }
    letters.push_back({"y", "y"});
    keys.push_back(encode(Elem{std::vector<BigInt>(n_, 0), true}));
    set_letters(Alphabet(std::move(letters)), std::move(keys));
  }

  std::string ZnC2Engine::describe() const {
    return "Z^" + std::to_string(n_) + " x| Z/2 (" + phi_.describe() + ")";
  }

  Key ZnC2Engine::identity_key() const {
    return encode(Elem{std::vector<BigInt>(n_, 0), false});
  }

  ZnC2Engine::Elem ZnC2Engine::decode(Key const& k) const {
    auto parts = split_inner(k, '(', ')', ';');
    if (parts.size() != 2 || (parts[1] != "0" && parts[1] != "1")) {
      throw InputError("malformed key: " + k);
    }
    Elem e;
    for (auto p : split(parts[0], ',')) {
      e.m.push_back(parse_int(p, k));
    }
    if (e.m.size() != n_) {
      throw InputError("key has wrong rank: " + k);
    }
    e.eps = parts[1] == "1";
    return e;
  }

  Key ZnC2Engine::encode(Elem const& e) const {
    return "(" + join_ints(e.m) + ";" + (e.eps ? "1" : "0") + ")";
  }

  void ZnC2Engine::apply_phi(std::vector<BigInt>& m) const {
    if (phi_.kind == Phi::Kind::invert) {
      m[phi_.i - 1] = -m[phi_.i - 1];
    } else {
      std::swap(m[phi_.i - 1], m[phi_.j - 1]);
    }
  }

  ZnC2Engine::Elem ZnC2Engine::mul(Elem const& a, Elem const& b) const {
    Elem r{b.m, a.eps != b.eps};
    if (a.eps) {
      apply_phi(r.m);
    }
    for (std::size_t k = 0; k < n_; ++k) {
      r.m[k] += a.m[k];
    }
    return r;
  }

  Key ZnC2Engine::multiply(Key const& g, Key const& h) const {
    return encode(mul(decode(g), decode(h)));
  }

  Key ZnC2Engine::inverse(Key const& g) const {
    Elem e = decode(g);
    if (e.eps) {
      apply_phi(e.m);
    }
    for (auto& x : e.m) {
      x = -x;
    }
    return encode(e);
  }

  Word ZnC2Engine::normal_form(Key const& g) const {
    Elem e = decode(g);
    Word w;
    for (std::size_t k = 0; k < n_; ++k) {
      push_power(w, e.m[k], static_cast<LetterId>(2 * k),
                 static_cast<LetterId>(2 * k + 1));
    }
    if (e.eps) {
      w.push_back(static_cast<LetterId>(2 * n_));
    }
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // BS12Engine
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void reduce(BS12Engine::Elem& x) {
      if (x.num == 0) {
        x.k = 0;
        return;
      }
      while (x.k > 0 && (x.num & 1) == 0) {
        x.num >>= 1;
        --x.k;
      }
    }

    // Multiplies num / 2^k by 2^s.
    void scale(BigInt& num, std::uint64_t& k, std::int64_t s) {
      if (s >= 0) {
        num <<= static_cast<unsigned>(s);
      } else {
        k += static_cast<std::uint64_t>(-s);
      }
    }
  }  // namespace

  BS12Engine::BS12Engine() {
    std::vector<Letter> letters{
        {"a", "a^-1"}, {"a^-1", "a"}, {"t", "t^-1"}, {"t^-1", "t"}};
    std::vector<Key> keys{encode({0, 1, 0}), encode({0, -1, 0}),
                          encode({1, 0, 0}), encode({-1, 0, 0})};
    set_letters(Alphabet(std::move(letters)), std::move(keys));
  }

  std::string BS12Engine::describe() const {
    return "BS(1,2)";
  }

  Key BS12Engine::identity_key() const {
    return encode({0, 0, 0});
  }

  Key BS12Engine::encode(Elem e) {
    reduce(e);
    std::string q = e.num.str();
    if (e.k > 0) {
      q += "/" + (BigInt(1) << static_cast<unsigned>(e.k)).str();
    }
    return "[" + std::to_string(e.e) + ";" + q + "]";
  }

  BS12Engine::Elem BS12Engine::decode(Key const& k) const {
    auto parts = split_inner(k, '[', ']', ';');
    if (parts.size() != 2) {
      throw InputError("malformed key: " + k);
    }
    Elem x;
    BigInt e = parse_int(parts[0], k);
    if (e > 1'000'000'000 || e < -1'000'000'000) {
      throw InputError("exponent out of range: " + k);
    }
    x.e = static_cast<std::int64_t>(e);
    auto q = split(parts[1], '/');
    if (q.empty() || q.size() > 2) {
      throw InputError("malformed key: " + k);
    }
    x.num = parse_int(q[0], k);
    if (q.size() == 2) {
      BigInt den = parse_int(q[1], k);
      if (den <= 0 || (den & (den - 1)) != 0) {
        throw InputError("denominator is not a power of two: " + k);
      }
      x.k = boost::multiprecision::msb(den);
    }
    return x;
  }

  BS12Engine::Elem BS12Engine::compose(Elem const& a, Elem const& b) {
    Elem r;
    r.e = a.e + b.e;
    BigInt nb = b.num;
    std::uint64_t kb = b.k;
    scale(nb, kb, a.e);
    std::uint64_t k = std::max(kb, a.k);
    r.num = (nb << static_cast<unsigned>(k - kb))
            + (a.num << static_cast<unsigned>(k - a.k));
    r.k = k;
    reduce(r);
    return r;
  }

  BS12Engine::Elem BS12Engine::invert(Elem const& a) {
    Elem r{-a.e, -a.num, a.k};
    scale(r.num, r.k, -a.e);
    reduce(r);
    return r;
  }

  Key BS12Engine::multiply(Key const& g, Key const& h) const {
    return encode(compose(decode(g), decode(h)));
  }

  Key BS12Engine::inverse(Key const& g) const {
    return encode(invert(decode(g)));
  }

  Word BS12Engine::normal_form(Key const& g) const {
    Elem x = decode(g);
    reduce(x);
    auto k = static_cast<std::int64_t>(x.k);
    std::int64_t i = std::max(k, -x.e);
    BigInt n = x.num << static_cast<unsigned>(i - k);
    std::int64_t j = x.e + i;
    Word w;
    push_power(w, BigInt(-i), 2, 3);
    push_power(w, n, 0, 1);
    push_power(w, BigInt(j), 2, 3);
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // ZmSemidirectEngine
  ////////////////////////////////////////////////////////////////////////

  ZmSemidirectEngine::ZmSemidirectEngine(std::uint64_t n,
                                         std::uint64_t s,
                                         std::optional<std::uint64_t> t_order,
                                         std::string normal_name,
                                         std::string acting_name)
      : n_(n),
        s_(n == 0 ? 0 : s % n),
        t_order_(t_order),
        s_order_(1),
        normal_name_(std::move(normal_name)),
        acting_name_(std::move(acting_name)) {
    if (n_ == 0) {
      throw BadParams("modulus must be positive");
    }
    if (n_ > 1 && std::gcd(s_, n_) != 1) {
      throw BadParams("s must be a unit modulo n");
    }
    if (t_order_ && *t_order_ == 0) {
      throw BadParams("t_order must be positive");
    }
    if (n_ > 1) {
      std::uint64_t x = s_;
      while (x != 1) {
        x = static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(x) * s_ % n_);
        ++s_order_;
      }
    }
    if (t_order_ && pow_mod(s_, *t_order_, n_) != 1 % n_) {
      throw BadParams("s^t_order must be 1 modulo n");
    }
    std::vector<Letter> letters{{normal_name_, normal_name_ + "^-1"},
                                {normal_name_ + "^-1", normal_name_},
                                {acting_name_, acting_name_ + "^-1"},
                                {acting_name_ + "^-1", acting_name_}};
    std::vector<Key> keys{encode({1 % n_, 0}), encode({n_ - 1, 0}),
                          encode({0, 1}), encode({0, -1})};
    set_letters(Alphabet(std::move(letters)), std::move(keys));
  }

  std::string ZmSemidirectEngine::describe() const {
    std::ostringstream out;
    out << "Z/" << n_ << " x| ";
    if (t_order_) {
      out << "Z/" << *t_order_;
    } else {
      out << "Z";
    }
    out << " (" << acting_name_ << " " << normal_name_ << " "
        << acting_name_ << "^-1 = " << normal_name_ << "^" << s_ << ")";
    return out.str();
  }

  std::optional<std::uint64_t> ZmSemidirectEngine::order() const {
    if (t_order_) {
      return n_ * *t_order_;
    }
    return std::nullopt;
  }

  Key ZmSemidirectEngine::identity_key() const {
    return encode({0, 0});
  }

  Key ZmSemidirectEngine::encode(Elem e) const {
    e.i %= n_;
    if (t_order_) {
      e.j = residue(e.j, *t_order_);
    }
    return "(" + std::to_string(e.i) + "," + e.j.str() + ")";
  }

  ZmSemidirectEngine::Elem ZmSemidirectEngine::decode(Key const& k) const {
    auto parts = split_inner(k, '(', ')', ',');
    if (parts.size() != 2) {
      throw InputError("malformed key: " + k);
    }
    BigInt i = parse_int(parts[0], k);
    if (i < 0 || i >= n_) {
      throw InputError("malformed key: " + k);
    }
    return {static_cast<std::uint64_t>(i), parse_int(parts[1], k)};
  }

  std::uint64_t ZmSemidirectEngine::s_power(BigInt const& j) const {
    return pow_mod(s_, residue(j, s_order_), n_);
  }

  ZmSemidirectEngine::Elem ZmSemidirectEngine::mul(Elem const& a,
                                                    Elem const& b) const {
    auto twist = static_cast<unsigned __int128>(s_power(a.j)) * b.i % n_;
    Elem r{static_cast<std::uint64_t>((a.i + twist) % n_), a.j + b.j};
    if (t_order_) {
      r.j = residue(r.j, *t_order_);
    }
    return r;
  }

  Key ZmSemidirectEngine::multiply(Key const& g, Key const& h) const {
    return encode(mul(decode(g), decode(h)));
  }

  Key ZmSemidirectEngine::inverse(Key const& g) const {
    Elem e = decode(g);
    auto twist = static_cast<unsigned __int128>(s_power(-e.j)) * e.i % n_;
    return encode({static_cast<std::uint64_t>((n_ - twist) % n_), -e.j});
  }

  Word ZmSemidirectEngine::normal_form(Key const& g) const {
    Elem e = decode(g);
    Word w;
    push_power(w, BigInt(e.i), 0, 1);
    push_power(w, e.j, 2, 3);
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // ProductEngine
  ////////////////////////////////////////////////////////////////////////

  ProductEngine::ProductEngine(EnginePtr left, EnginePtr right)
      : left_(std::move(left)), right_(std::move(right)) {
    std::vector<Letter> letters;
    std::vector<Key> keys;
    Key id1 = left_->identity_key(), id2 = right_->identity_key();
    auto const& l1 = left_->builtin_letters();
    for (LetterId a = 0; a < l1.size(); ++a) {
      letters.push_back({l1[a].name + "_1", l1[a].inverse_name + "_1"});
      keys.push_back(join(left_->letter_key(a), id2));
    }
    auto const& l2 = right_->builtin_letters();
    for (LetterId a = 0; a < l2.size(); ++a) {
      letters.push_back({l2[a].name + "_2", l2[a].inverse_name + "_2"});
      keys.push_back(join(id1, right_->letter_key(a)));
    }
    set_letters(Alphabet(std::move(letters)), std::move(keys));
  }

  std::string ProductEngine::describe() const {
    return "(" + left_->describe() + ") x (" + right_->describe() + ")";
  }

  Key ProductEngine::join(Key const& a, Key const& b) {
    return "<" + a + "|" + b + ">";
  }

  std::pair<Key, Key> ProductEngine::split(Key const& k) {
    if (k.size() < 3 || k.front() != '<' || k.back() != '>') {
      throw InputError("malformed key: " + k);
    }
    int depth = 0;
    for (std::size_t i = 1; i + 1 < k.size(); ++i) {
      char c = k[i];
      if (c == '<') {
        ++depth;
      } else if (c == '>') {
        --depth;
      } else if (c == '|' && depth == 0) {
        return {k.substr(1, i - 1), k.substr(i + 1, k.size() - i - 2)};
      }
    }
    throw InputError("malformed key: " + k);
  }

  Key ProductEngine::identity_key() const {
    return join(left_->identity_key(), right_->identity_key());
  }

  Key ProductEngine::multiply(Key const& g, Key const& h) const {
    auto [g1, g2] = split(g);
    auto [h1, h2] = split(h);
    return join(left_->multiply(g1, h1), right_->multiply(g2, h2));
  }

  Key ProductEngine::inverse(Key const& g) const {
    auto [g1, g2] = split(g);
    return join(left_->inverse(g1), right_->inverse(g2));
  }

  std::optional<std::uint64_t> ProductEngine::order() const {
    auto a = left_->order(), b = right_->order();
    if (a && b) {
      return *a * *b;
    }
    return std::nullopt;
  }

  Word ProductEngine::normal_form(Key const& g) const {
    auto [g1, g2] = split(g);
    Word w = left_->normal_form(g1);
    auto offset = static_cast<LetterId>(left_->builtin_letters().size());
    for (auto x : right_->normal_form(g2)) {
      w.push_back(x + offset);
    }
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // ExtensionEngine
  ////////////////////////////////////////////////////////////////////////

  ExtensionEngine::ExtensionEngine(TablePtr base,
                                   std::size_t rank,
                                   std::vector<std::vector<Element>> actions)
      : base_(std::move(base)), rank_(rank) {
    auto const& H = *base_;
    std::size_t n = H.order();
    if (actions.empty()) {
      std::vector<Element> id(n);
      std::iota(id.begin(), id.end(), Element{0});
      actions.assign(rank_, id);
    }
    if (actions.size() != rank_) {
      throw BadParams("need one action per free direction");
    }
    for (auto const& a : actions) {
      if (a.size() != n) {
        throw BadParams("action has the wrong size");
      }
      std::vector<bool> hit(n, false);
      for (auto x : a) {
        if (x >= n || hit[x]) {
          throw BadParams("action is not a permutation");
        }
        hit[x] = true;
      }
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          if (a[H.mul(x, y)] != H.mul(a[x], a[y])) {
            throw BadParams("action is not an automorphism");
          }
        }
      }
    }
    for (std::size_t k = 0; k < rank_; ++k) {
      for (std::size_t l = k + 1; l < rank_; ++l) {
        for (Element x = 0; x < n; ++x) {
          if (actions[k][actions[l][x]] != actions[l][actions[k][x]]) {
            throw BadParams("actions do not commute");
          }
        }
      }
    }
    for (auto const& a : actions) {
      std::vector<Element> id(n);
      std::iota(id.begin(), id.end(), Element{0});
      std::vector<std::vector<Element>> pw{id};
      for (auto p = a; p != id;) {
        pw.push_back(p);
        std::vector<Element> next(n);
        for (Element x = 0; x < n; ++x) {
          next[x] = a[p[x]];
        }
        p = std::move(next);
      }
      powers_.push_back(std::move(pw));
    }

    std::vector<Letter> letters = H.alphabet().letters();
    std::vector<Key> keys;
    for (auto e : H.letter_elements()) {
      keys.push_back(key_of(e));
    }
    for (std::size_t k = 0; k < rank_; ++k) {
      std::string t = direction_name(k);
      letters.push_back({t, t + "^-1"});
      letters.push_back({t + "^-1", t});
      std::vector<BigInt> v(rank_, 0);
      v[k] = 1;
      keys.push_back(key_of(H.identity(), v));
      v[k] = -1;
      keys.push_back(key_of(H.identity(), v));
    }
    set_letters(Alphabet(std::move(letters)), std::move(keys));
  }

  std::string ExtensionEngine::direction_name(std::size_t k) const {
    return rank_ == 1 ? std::string("t") : "t" + std::to_string(k + 1);
  }

  std::string ExtensionEngine::describe() const {
    return "H x| Z^" + std::to_string(rank_) + " (|H| = "
           + std::to_string(base_->order()) + ")";
  }

  std::optional<std::uint64_t> ExtensionEngine::order() const {
    if (rank_ == 0) {
      return base_->order();
    }
    return std::nullopt;
  }

  Key ExtensionEngine::identity_key() const {
    return key_of(base_->identity());
  }

  Key ExtensionEngine::key_of(Element h, std::vector<BigInt> v) const {
    if (v.empty()) {
      v.assign(rank_, 0);
    }
    return encode({h, std::move(v)});
  }

  Key ExtensionEngine::encode(Elem const& e) const {
    return "(" + std::to_string(e.h) + ";" + join_ints(e.v) + ")";
  }

  ExtensionEngine::Elem ExtensionEngine::decode(Key const& k) const {
    auto parts = split_inner(k, '(', ')', ';');
    if (parts.size() != 2) {
      throw InputError("malformed key: " + k);
    }
    BigInt h = parse_int(parts[0], k);
    if (h < 0 || h >= base_->order()) {
      throw InputError("malformed key: " + k);
    }
    Elem e{static_cast<Element>(h), {}};
    for (auto p : split(parts[1], ',')) {
      e.v.push_back(parse_int(p, k));
    }
    if (e.v.size() != rank_) {
      throw InputError("key has wrong rank: " + k);
    }
    return e;
  }

  Element ExtensionEngine::act(std::vector<BigInt> const& v, Element h) const {
    for (std::size_t k = 0; k < rank_; ++k) {
      auto const& pw = powers_[k];
      h = pw[residue(v[k], pw.size())][h];
    }
    return h;
  }

  ExtensionEngine::Elem ExtensionEngine::mul(Elem const& a,
                                             Elem const& b) const {
    Elem r{base_->mul(a.h, act(a.v, b.h)), a.v};
    for (std::size_t k = 0; k < rank_; ++k) {
      r.v[k] += b.v[k];
    }
    return r;
  }

  Key ExtensionEngine::multiply(Key const& g, Key const& h) const {
    return encode(mul(decode(g), decode(h)));
  }

  Key ExtensionEngine::inverse(Key const& g) const {
    Elem e = decode(g);
    for (auto& x : e.v) {
      x = -x;
    }
    e.h = act(e.v, base_->inv(e.h));
    return encode(e);
  }

  Word ExtensionEngine::normal_form(Key const& g) const {
    Elem e = decode(g);
    Word w = base_->name(e.h);
    auto offset = static_cast<LetterId>(base_->alphabet().size());
    for (std::size_t k = 0; k < rank_; ++k) {
      push_power(w, e.v[k], offset + static_cast<LetterId>(2 * k),
                 offset + static_cast<LetterId>(2 * k + 1));
    }
    return w;
  }

  std::vector<Element> parse_cycles(std::string const& text,
                                    std::size_t order) {
    std::vector<Element> perm(order);
    std::iota(perm.begin(), perm.end(), Element{0});
    std::string t = text;
    if (t.find_first_not_of(" \t") == std::string::npos || t == "id") {
      return perm;
    }
    std::size_t pos = 0;
    std::vector<bool> used(order, false);
    while (pos < t.size()) {
      while (pos < t.size() && (t[pos] == ' ' || t[pos] == '\t')) {
        ++pos;
      }
      if (pos == t.size()) {
        break;
      }
      if (t[pos] != '(') {
        throw InputError("bad cycle notation: " + text);
      }
      auto close = t.find(')', pos);
      if (close == std::string::npos) {
        throw InputError("bad cycle notation: " + text);
      }
      std::istringstream in(t.substr(pos + 1, close - pos - 1));
      std::vector<Element> cycle;
      long long x;
      while (in >> x) {
        if (x < 0 || static_cast<std::size_t>(x) >= order || used[x]) {
          throw InputError("bad cycle notation: " + text);
        }
        used[x] = true;
        cycle.push_back(static_cast<Element>(x));
      }
      if (!in.eof()) {
        throw InputError("bad cycle notation: " + text);
      }
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        perm[cycle[i]] = cycle[(i + 1) % cycle.size()];
      }
      pos = close + 1;
    }
    return perm;
  }

}  // namespace geolang
