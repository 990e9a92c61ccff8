#pragma once

#include "wsa/element.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace wsa {

enum class ElementKind { natural, fraction };

/// A computable semigroup: total composition rule plus finite enumeration
/// windows W(1) ⊆ W(2) ⊆ … listed in canonical ascending order. Declared
/// structural flags are assertions to probe, never silently trusted.
class Semigroup {
public:
    struct DeclaredFlags {
        bool commutative = false;
        bool right_cancellative = false;
        bool totally_ordered = false;
    };

    virtual ~Semigroup() = default;

    virtual const std::string& id() const = 0;
    virtual ElementKind element_kind() const = 0;
    virtual bool validate(const Element& e) const = 0;
    virtual Element compose(const Element& a, const Element& b) const = 0;
    virtual std::vector<Element> window(int m) const = 0;
    virtual DeclaredFlags declared() const = 0;

    /// Whether the canonical numeric order is available as a total order.
    virtual bool totally_ordered() const { return declared().totally_ordered; }
    /// Finite carriers make window probes exhaustive rather than evidence.
    virtual bool finite() const { return false; }

protected:
    void require_valid(const Element& e) const;
};

/// s^n for n >= 1; semigroups need not have an identity, so n = 0 is refused.
Element power(const Semigroup& sg, const Element& s, long long n);

std::shared_ptr<const Semigroup> make_nat_add();
std::shared_ptr<const Semigroup> make_nat_min();
std::shared_ptr<const Semigroup> make_nat_leftzero();
std::shared_ptr<const Semigroup> make_qpos_add();
std::shared_ptr<const Semigroup> make_cayley(std::string id, std::vector<std::vector<int>> table, bool with_order = false);
std::shared_ptr<const Semigroup> load_cayley_file(const std::string& path);

/// Selector syntax: nat-add | nat-min | nat-leftzero | qpos-add | cayley:<path>.
std::shared_ptr<const Semigroup> make_semigroup(const std::string& selector);

struct TripleWitness {
    Element a, b, c;
};

/// First (a,b,c) in lexicographic window order with a != b and ac == bc.
std::optional<TripleWitness> probe_right_cancellative(const Semigroup& sg, int m);
/// First (a,b,c) with (ab)c != a(bc).
std::optional<TripleWitness> probe_associative(const Semigroup& sg, int m);
/// First (s,t,u) with s < t where us <= ut or su <= tu fails.
std::optional<TripleWitness> probe_order_compatibility(const Semigroup& sg, int m);

} // namespace wsa
