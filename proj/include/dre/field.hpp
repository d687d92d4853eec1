/*
   Copyright 2026 The drinfeld-euler authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DRE_FIELD_HPP
#define DRE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "common.hpp"

namespace dre {

// Description of the base field F_q, q = p^deg. The modulus is a monic
// irreducible polynomial over F_p, stored constant-first with the leading 1
// included. When a config is built without an explicit modulus, the first
// irreducible in graded-lex order is used, so representations are
// reproducible across runs and platforms.
struct FqConfig {
    int p = 2;
    int deg = 1;
    std::vector<std::uint8_t> modulus;  // length deg+1, constant first, monic
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Element of F_{q^m} in the polynomial basis of an F_p-modulus of degree
// deg(q)*m. A default-constructed element is the zero of every field; all
// other elements carry a pointer to their field, which must outlive them.
struct Fq {
    const Field* F = nullptr;
    std::vector<std::uint8_t> c;  // F_p digits, length F->fp_degree()

    bool attached() const { return F != nullptr; }
    bool is_zero() const;
};

bool operator==(const Fq& a, const Fq& b);
inline bool operator!=(const Fq& a, const Fq& b) { return !(a == b); }
Fq operator+(const Fq& a, const Fq& b);
Fq operator-(const Fq& a, const Fq& b);
Fq operator*(const Fq& a, const Fq& b);
Fq operator-(const Fq& a);
Fq inv(const Fq& a);
Fq pow_q(const Fq& a);  // x -> x^q, the designated Frobenius of the tower

// An F_{q^m} in a fixed representation: F_p[x]/(modulus) with the base F_q
// embedded by mapping its canonical generator to the lexicographically
// smallest root of the base modulus.
class Field : public std::enable_shared_from_this<Field> {
  public:
    // m = 1 reproduces F_q itself with the config's own modulus.
    static FieldPtr make(const FqConfig& cfg, int m = 1);

    int p() const { return cfg_.p; }
    int base_degree() const { return cfg_.deg; }          // s with q = p^s
    int ext_degree() const { return m_; }                 // m
    int fp_degree() const { return cfg_.deg * m_; }       // s*m
    std::int64_t q() const { return q_; }                 // p^s
    const FqConfig& config() const { return cfg_; }
    const std::vector<std::uint8_t>& modulus() const { return modulus_; }

    Fq zero() const { return Fq{}; }
    Fq one() const;
    Fq gen() const;  // class of x
    Fq from_fp_coords(std::vector<std::uint8_t> digits) const;
    Fq from_int(std::int64_t k) const;  // k * 1, the prime-field image
    // element of the base F_q given by its s digits, pushed through the
    // base embedding
    Fq embed_base(const std::vector<std::uint8_t>& base_digits) const;
    // inverse of embed_base; nullopt when the element is outside F_q
    std::optional<std::vector<std::uint8_t>> project_base(const Fq& a) const;

    Fq add(const Fq& a, const Fq& b) const;
    Fq sub(const Fq& a, const Fq& b) const;
    Fq mul(const Fq& a, const Fq& b) const;
    Fq neg(const Fq& a) const;
    Fq inverse(const Fq& a) const;
    Fq pow(const Fq& a, std::int64_t e) const;
    Fq pow_p(const Fq& a) const;
    Fq pow_q(const Fq& a) const;                // x^q
    Fq frobenius(const Fq& a, int k) const;     // x^(q^k)

    // coordinates with respect to the F_q-basis {1, x, ..., x^(m-1)};
    // returned as elements of the base field object
    std::vector<Fq> fq_coords(const Fq& a) const;
    Fq from_fq_coords(const std::vector<Fq>& coords) const;
    FieldPtr base_field() const;  // the F_q of the tower (may be *this)

    // deterministic element enumeration: digits of idx in base p,
    // constant digit first; idx < p^(s*m)
    Fq element_at(std::uint64_t idx) const;
    std::uint64_t element_count() const;  // throws if it exceeds 2^40

    // all elements of the subfield F_{q^a} (requires a | m and small size)
    std::vector<Fq> subfield_elements(int a) const;

    // multiplicative order of a nonzero element
    std::int64_t mult_order(const Fq& a) const;
    // lexicographically smallest generator of the multiplicative group
    Fq canonical_generator() const;

    std::uint64_t element_index(const Fq& a) const;

  private:
    Field() = default;
    void init();

    FqConfig cfg_;
    int m_ = 1;
    std::int64_t q_ = 2;
    std::vector<std::uint8_t> modulus_;  // degree s*m over F_p
    // p-power and q-power maps as F_p-matrices, column-major: column j is
    // the image of x^j
    std::vector<std::vector<std::uint8_t>> frob_p_;
    std::vector<std::vector<std::uint8_t>> frob_q_;
    std::vector<std::uint8_t> base_gen_image_;  // root of cfg.modulus in here
    // change of basis between the F_p-basis {x^i} and the mixed basis
    // {x^j * g^l}, g the embedded base generator; used by fq_coords
    std::vector<std::vector<std::uint8_t>> mixed_to_fp_;
    std::vector<std::vector<std::uint8_t>> fp_to_mixed_;
    mutable FieldPtr base_cache_;

    friend Fq(::dre::pow_q)(const Fq& a);
};

// Embedding F_{q^a} -> F_{q^b} for a | b, determined by sending the
// generator of the small field to the lexicographically smallest root of
// its modulus in the big field.
class FieldEmbedding {
  public:
    FieldEmbedding() = default;
    FieldEmbedding(FieldPtr from, FieldPtr to);

    Fq apply(const Fq& a) const;
    // partial inverse: defined exactly on the image
    std::optional<Fq> project(const Fq& b) const;
    const Field* from() const { return from_.get(); }
    const Field* to() const { return to_.get(); }

  private:
    FieldPtr from_, to_;
    std::vector<std::vector<std::uint8_t>> cols_;  // image of x^j, F_p digits
};

// graded-lex-first irreducible of degree n over F_p (monic, constant first)
std::vector<std::uint8_t> find_irreducible_fp(int p, int n);
bool is_irreducible_fp(const std::vector<std::uint8_t>& f, int p);

}  // namespace dre

#endif
