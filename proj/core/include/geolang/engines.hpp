#pragma once

// Exact normal-form engines for infinite (and some finite) families.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geolang/engine.hpp"
#include "geolang/table.hpp"

namespace geolang {

  using BigInt = boost::multiprecision::cpp_int;

  ////////////////////////////////////////////////////////////////////////
  // Z^n x| Z/2
  ////////////////////////////////////////////////////////////////////////

  // The involution of Z^n used by ZnC2Engine. Coordinates are 1-based.
  struct Phi {
    enum class Kind { invert, swap };
    Kind kind;
    std::size_t i;
    std::size_t j = 0;

    static Phi invert(std::size_t i) { return {Kind::invert, i, 0}; }
    static Phi swap(std::size_t i, std::size_t j) { return {Kind::swap, i, j}; }
    std::string describe() const;
  };

  // Elements x1^m1 ... xn^mn y^eps with y x y = phi(x). Builtin letters
  // x1, x1^-1, ..., xn, xn^-1, y (y is self-inverse).
  class ZnC2Engine final : public GroupEngine {
   public:
    struct Elem {
      std::vector<BigInt> m;
      bool eps = false;
    };

    ZnC2Engine(std::size_t n, Phi phi);

    std::string describe() const override;
    Key identity_key() const override;
    Key multiply(Key const& g, Key const& h) const override;
    Key inverse(Key const& g) const override;
    Word normal_form(Key const& g) const override;

    std::size_t rank() const noexcept { return n_; }
    Phi phi() const noexcept { return phi_; }
    Elem decode(Key const& k) const;
    Key encode(Elem const& e) const;
    Elem mul(Elem const& a, Elem const& b) const;
    void apply_phi(std::vector<BigInt>& m) const;

   private:
    std::size_t n_;
    Phi phi_;
  };

  ////////////////////////////////////////////////////////////////////////
  // BS(1,2)
  ////////////////////////////////////////////////////////////////////////

  // Affine maps x -> 2^e x + q with q = num / 2^k dyadic, stored reduced.
  // a = x + 1, t = 2x; product g*h is the composite g(h(x)).
  class BS12Engine final : public GroupEngine {
   public:
    struct Elem {
      std::int64_t e = 0;
      BigInt num = 0;
      std::uint64_t k = 0;  // denominator exponent
    };

    BS12Engine();

    std::string describe() const override;
    Key identity_key() const override;
    Key multiply(Key const& g, Key const& h) const override;
    Key inverse(Key const& g) const override;
    // t^-i a^n t^j with i, j >= 0 and n odd whenever both i, j > 0.
    Word normal_form(Key const& g) const override;

    Elem decode(Key const& k) const;
    static Key encode(Elem e);
    static Elem compose(Elem const& a, Elem const& b);
    static Elem invert(Elem const& a);
  };

  ////////////////////////////////////////////////////////////////////////
  // Z/n x| Z or Z/n x| Z/m
  ////////////////////////////////////////////////////////////////////////

  // Elements a^i t^j with t a t^-1 = a^s. The acting factor is infinite when
  // t_order is empty.
  class ZmSemidirectEngine final : public GroupEngine {
   public:
    struct Elem {
      std::uint64_t i = 0;
      BigInt j = 0;
    };

    ZmSemidirectEngine(std::uint64_t n,
                       std::uint64_t s,
                       std::optional<std::uint64_t> t_order,
                       std::string normal_name = "a",
                       std::string acting_name = "t");

    std::string describe() const override;
    Key identity_key() const override;
    Key multiply(Key const& g, Key const& h) const override;
    Key inverse(Key const& g) const override;
    std::optional<std::uint64_t> order() const override;
    // a^i t^j with 0 <= i < n (and 0 <= j < t_order when finite).
    Word normal_form(Key const& g) const override;

    std::uint64_t modulus() const noexcept { return n_; }
    std::uint64_t multiplier() const noexcept { return s_; }
    std::optional<std::uint64_t> t_order() const noexcept { return t_order_; }
    Elem decode(Key const& k) const;
    Key encode(Elem e) const;
    Elem mul(Elem const& a, Elem const& b) const;

   private:
    std::uint64_t s_power(BigInt const& j) const;

    std::uint64_t n_;
    std::uint64_t s_;
    std::optional<std::uint64_t> t_order_;
    std::uint64_t s_order_;  // multiplicative order of s mod n
    std::string normal_name_;
    std::string acting_name_;
  };

  ////////////////////////////////////////////////////////////////////////
  // Direct product of two engines
  ////////////////////////////////////////////////////////////////////////

  // Builtin letters of the factors renamed x_1 and x_2.
  class ProductEngine final : public GroupEngine {
   public:
    ProductEngine(EnginePtr left, EnginePtr right);

    std::string describe() const override;
    Key identity_key() const override;
    Key multiply(Key const& g, Key const& h) const override;
    Key inverse(Key const& g) const override;
    std::optional<std::uint64_t> order() const override;
    Word normal_form(Key const& g) const override;

    GroupEngine const& left() const noexcept { return *left_; }
    GroupEngine const& right() const noexcept { return *right_; }
    static std::pair<Key, Key> split(Key const& k);
    static Key join(Key const& a, Key const& b);

   private:
    EnginePtr left_;
    EnginePtr right_;
  };

  ////////////////////////////////////////////////////////////////////////
  // Split extension H x| Z^r
  ////////////////////////////////////////////////////////////////////////

  // Elements (h, v) with t_k h t_k^-1 = action_k(h). Each action is a
  // permutation of H's element indices that must be an automorphism, and the
  // actions must commute. Builtin letters: H's letters, then t (r = 1) or
  // t1..tr.
  class ExtensionEngine final : public GroupEngine {
   public:
    struct Elem {
      Element h = 0;
      std::vector<BigInt> v;
    };

    ExtensionEngine(TablePtr base,
                    std::size_t rank,
                    std::vector<std::vector<Element>> actions);

    std::string describe() const override;
    Key identity_key() const override;
    Key multiply(Key const& g, Key const& h) const override;
    Key inverse(Key const& g) const override;
    std::optional<std::uint64_t> order() const override;
    Word normal_form(Key const& g) const override;

    FiniteGroupTable const& base() const noexcept { return *base_; }
    std::size_t rank() const noexcept { return rank_; }
    // Letter name of the k-th free direction (0-based).
    std::string direction_name(std::size_t k) const;
    Key key_of(Element h, std::vector<BigInt> v = {}) const;
    Elem decode(Key const& k) const;
    Key encode(Elem const& e) const;
    Elem mul(Elem const& a, Elem const& b) const;

   private:
    Element act(std::vector<BigInt> const& v, Element h) const;

    TablePtr base_;
    std::size_t rank_;
    // powers_[k][p] is the p-th power of action k, p < its order.
    std::vector<std::vector<std::vector<Element>>> powers_;
  };

  // Parses "(1 2)(3 4 5)" style cycles over element indices into a
  // permutation of 0..order-1.
  std::vector<Element> parse_cycles(std::string const& text, std::size_t order);

}  // namespace geolang
