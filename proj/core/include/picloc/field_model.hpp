#ifndef PICLOC_FIELD_MODEL_HPP
#define PICLOC_FIELD_MODEL_HPP

#include <string>
#include <string_view>
#include <vector>

#include "picloc/abelian.hpp"

namespace picloc {

/**
 * A class of coefficient fields K, used to evaluate Hom(-, K*) and
 * Ext(-, K*) on finitely generated abelian groups.
 */
struct FieldModel
{
    enum class Kind
    {
        FiniteField,       // F_q, parameter = q
        AlgClosedChar0,
        AlgClosedCharP,    // parameter = p
        Reals,
        Rationals,
        Symbolic,
    };

    Kind kind = Kind::Symbolic;
    Integer parameter = 0;

    static FieldModel finite_field(const Integer& q);   // throws UnsupportedModel unless q is a prime power
    static FieldModel alg_closed_char0() { return {Kind::AlgClosedChar0, 0}; }
    static FieldModel alg_closed_char_p(const Integer& p);   // throws UnsupportedModel unless p is prime
    static FieldModel reals() { return {Kind::Reals, 0}; }
    static FieldModel rationals() { return {Kind::Rationals, 0}; }
    static FieldModel symbolic() { return {Kind::Symbolic, 0}; }

    // Characteristic; 0 for every model except finite fields and AlgClosedCharP.
    Integer characteristic() const;

    // "F_7", "Qbar", "Fpbar(3)", "R", "Q", "symbolic"
    std::string name() const;

    friend bool operator==(const FieldModel&, const FieldModel&) = default;
};

/**
 * Parses a command-line field spec: `q=<prime power>`, `Qbar`, `Cstar`,
 * `Fpbar=<prime>`, `R`, `Q` or `symbolic`. Throws ParseError on unknown
 * syntax and UnsupportedModel on an invalid parameter.
 */
FieldModel parse_field_model(std::string_view spec);

/**
 * A cohomology value with a possibly symbolic field part.
 *
 * `concrete` holds everything that evaluates to an explicit group. The
 * remaining fields are formal summands: `kstar_copies` copies of K*, one
 * mu_d(K) per entry of `mu`, and one K* mod (K*)^d per entry of `ext`. When
 * `ext_infinite` is set, each `ext` entry stands for a countably infinite
 * direct sum of copies of Z/d.
 */
struct GroupValue
{
    FgAbelianGroup concrete;
    std::size_t kstar_copies = 0;
    std::vector<Integer> mu;
    std::vector<Integer> ext;
    bool ext_infinite = false;

    bool is_trivial() const { return concrete.is_trivial() && kstar_copies == 0 && mu.empty() && ext.empty(); }
    bool is_concrete() const { return kstar_copies == 0 && mu.empty() && ext.empty(); }

    std::string to_string() const;

    friend bool operator==(const GroupValue&, const GroupValue&) = default;
};

/**
 * Universal-coefficient evaluation
 *   H^j(K*) = Hom(h, K*) + Ext(source, K*)
 * where h = H_j(Z) and source = H_{j-1}(Z).
 */
GroupValue coefficient_value(const FgAbelianGroup& h, const FgAbelianGroup& source, const FieldModel& model);

// The same for coefficients Z/m: Hom(h, Z/m) + Ext(source, Z/m).
FgAbelianGroup uct_cyclic(const FgAbelianGroup& h, const FgAbelianGroup& source, const Integer& m);

bool is_prime(const Integer& n);
bool is_prime_power(const Integer& n);

}   // namespace picloc

#endif
