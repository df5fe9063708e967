#include <array>

#include "family.hpp"
#include "hurwitz/numtheory.hpp"

namespace hurwitz::detail {
namespace {

using Mat = std::array<std::int64_t, 4>;  // row-major a b / c d

class Psl2Family final : public FamilyArithmetic {
 public:
  explicit Psl2Family(int p) : p_(p) {}

  std::uint64_t order() const override {
    const auto p = static_cast<std::uint64_t>(p_);
    return p * (p * p - 1) / 2;
  }

  Element identity() const override { return canon({1, 0, 0, 1}); }

  Element multiply(const Element& x, const Element& y) const override {
    return canon(mat_mul(to_mat(x), to_mat(y)));
  }

  Element inverse(const Element& x) const override {
    const Mat m = to_mat(x);
    return canon({m[3], -m[1], -m[2], m[0]});
  }

  bool valid(const Element& x) const override {
    if (x.code.size() != 4) return false;
    for (auto v : x.code) {
      if (v < 0 || v >= p_) return false;
    }
    const Mat m = to_mat(x);
    if (nt::mod(m[0] * m[3] - m[1] * m[2], p_) != 1) return false;
    return canon(m) == x;
  }

  std::vector<Element> elements() const override {
    std::vector<Element> out;
    out.reserve(order());
    for (std::int64_t a = 0; a < p_; ++a) {
      for (std::int64_t b = 0; b < p_; ++b) {
        for (std::int64_t c = 0; c < p_; ++c) {
          for (std::int64_t d = 0; d < p_; ++d) {
            if (nt::mod(a * d - b * c, p_) != 1) continue;
            Element e = canon({a, b, c, d});
            if (e.code == std::vector<std::int32_t>{static_cast<std::int32_t>(a), static_cast<std::int32_t>(b),
                                                    static_cast<std::int32_t>(c), static_cast<std::int32_t>(d)}) {
              out.push_back(std::move(e));
            }
          }
        }
      }
    }
    return out;
  }

  std::vector<Element> generators() const override {
    return {canon({1, 1, 0, 1}), canon({0, -1, 1, 0})};
  }

  std::optional<AutData> automorphisms(std::string&) const override {
    // Aut(PSL(2,p)) = PGL(2,p): conjugation by SL(2,p) generators and by a
    // diagonal matrix with non-square determinant.
    std::int64_t omega = 2;
    while (!is_primitive_root(omega)) ++omega;
    AutData aut;
    const std::vector<std::pair<Mat, Mat>> conj = {
        {{1, 1, 0, 1}, {1, -1, 0, 1}},
        {{0, -1, 1, 0}, {0, 1, -1, 0}},
        {{omega, 0, 0, 1}, {inverse_mod(omega), 0, 0, 1}},
    };
    for (const auto& [g, gi] : conj) {
      aut.generators.push_back([this, g, gi](const Element& x) {
        return canon(mat_mul(mat_mul(g, to_mat(x)), gi));
      });
    }
    const auto p = static_cast<std::uint64_t>(p_);
    aut.order = p * (p * p - 1);
    return aut;
  }

 private:
  Mat to_mat(const Element& x) const { return {x.code[0], x.code[1], x.code[2], x.code[3]}; }

  Mat mat_mul(const Mat& x, const Mat& y) const {
    return {nt::mod(x[0] * y[0] + x[1] * y[2], p_), nt::mod(x[0] * y[1] + x[1] * y[3], p_),
            nt::mod(x[2] * y[0] + x[3] * y[2], p_), nt::mod(x[2] * y[1] + x[3] * y[3], p_)};
  }

  Element canon(const Mat& m) const {
    std::vector<std::int32_t> pos(4), neg(4);
    for (int i = 0; i < 4; ++i) {
      pos[i] = static_cast<std::int32_t>(nt::mod(m[i], p_));
      neg[i] = static_cast<std::int32_t>(nt::mod(-m[i], p_));
    }
    return Element{std::min(pos, neg)};
  }

  std::int64_t inverse_mod(std::int64_t a) const {
    for (std::int64_t x = 1; x < p_; ++x) {
      if (nt::mod(a * x, p_) == 1) return x;
    }
    return 0;
  }

  bool is_primitive_root(std::int64_t g) const {
    for (auto [q, e] : nt::factorize(p_ - 1)) {
      std::int64_t acc = 1;
      for (std::int64_t k = 0; k < (p_ - 1) / q; ++k) acc = nt::mod(acc * g, p_);
      if (acc == 1) return false;
    }
    return true;
  }

  std::int64_t p_;
};

}  // namespace

std::unique_ptr<FamilyArithmetic> make_psl2_family(int p) { return std::make_unique<Psl2Family>(p); }

}  // namespace hurwitz::detail
