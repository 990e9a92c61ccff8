#include "wsa/semigroup.hpp"

#include "wsa/errors.hpp"
#include "wsa/int128.hpp"
#include "wsa/kernels.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>

namespace wsa {

void Semigroup::require_valid(const Element& e) const {
    if (!validate(e))
        throw EncodingError("element " + e.str() + " is not a valid encoding for semigroup " + id());
}

Element power(const Semigroup& sg, const Element& s, long long n) {
    if (n < 1) throw DomainError("s^n needs n >= 1; semigroups need not have an identity");
    Element acc = s;
    for (long long i = 1; i < n; ++i) acc = sg.compose(acc, s);
    return acc;
}

namespace {

std::int64_t checked_add_i64(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("element magnitude exceeded 64-bit range");
    return r;
}

class NatSemigroup : public Semigroup {
public:
    NatSemigroup(std::string id, DeclaredFlags flags) : id_(std::move(id)), flags_(flags) {}

    const std::string& id() const override { return id_; }
    ElementKind element_kind() const override { return ElementKind::natural; }
    bool validate(const Element& e) const override { return e.is_natural(); }
    DeclaredFlags declared() const override { return flags_; }
    bool totally_ordered() const override { return true; }

    std::vector<Element> window(int m) const override {
        std::vector<Element> w;
        w.reserve(std::size_t(m));
        for (int i = 1; i <= m; ++i) w.push_back(Element::nat(i));
        return w;
    }

private:
    std::string id_;
    DeclaredFlags flags_;
};

class NatAdd final : public NatSemigroup {
public:
    NatAdd() : NatSemigroup("nat-add", {true, true, true}) {}
    Element compose(const Element& a, const Element& b) const override {
        require_valid(a);
        require_valid(b);
        return Element::nat(checked_add_i64(a.num(), b.num()));
    }
};

class NatMin final : public NatSemigroup {
public:
    NatMin() : NatSemigroup("nat-min", {true, false, true}) {}
    Element compose(const Element& a, const Element& b) const override {
        require_valid(a);
        require_valid(b);
        return a.num() <= b.num() ? a : b;
    }
};

class NatLeftZero final : public NatSemigroup {
public:
    // declared not right cancellative: the left-zero law makes the probe the arbiter
    NatLeftZero() : NatSemigroup("nat-leftzero", {false, false, true}) {}
    Element compose(const Element& a, const Element& b) const override {
        require_valid(a);
        require_valid(b);
        return a;
    }
};

class QPosAdd final : public Semigroup {
public:
    const std::string& id() const override { return id_; }
    ElementKind element_kind() const override { return ElementKind::fraction; }
    bool validate(const Element& e) const override { return e.num() >= 1 && e.den() >= 1; }
    DeclaredFlags declared() const override { return {true, true, true}; }
    bool totally_ordered() const override { return true; }

    Element compose(const Element& a, const Element& b) const override {
        require_valid(a);
        require_valid(b);
        int128 num = int128(a.num()) * b.den() + int128(b.num()) * a.den();
        int128 den = int128(a.den()) * b.den();
        uint128 g = gcd128(uint128(num), uint128(den));
        num /= int128(g);
        den /= int128(g);
        if (num > INT64_MAX || den > INT64_MAX)
            throw OverflowError("fraction element exceeded 64-bit range");
        return Element::fraction(std::int64_t(num), std::int64_t(den));
    }

    std::vector<Element> window(int m) const override {
        std::vector<Element> w;
        for (int p = 1; p <= m; ++p)
            for (int q = 1; q <= m; ++q)
                if (std::gcd(p, q) == 1) w.push_back(Element::fraction(p, q));
        std::sort(w.begin(), w.end());
        return w;
    }

private:
    std::string id_ = "qpos-add";
};

class Cayley final : public Semigroup {
public:
    Cayley(std::string id, std::vector<std::vector<int>> table, bool with_order)
        : id_(std::move(id)), table_(std::move(table)), ordered_(with_order) {
        std::size_t k = table_.size();
        if (k == 0) throw ConfigError("cayley table must be non-empty");
        for (const auto& row : table_) {
            if (row.size() != k) throw ConfigError("cayley table must be square");
            for (int v : row)
                if (v < 1 || std::size_t(v) > k)
                    throw ConfigError("cayley table entries must be 1-based indices within the carrier");
        }
    }

    const std::string& id() const override { return id_; }
    ElementKind element_kind() const override { return ElementKind::natural; }
    bool validate(const Element& e) const override {
        return e.is_natural() && e.num() >= 1 && std::size_t(e.num()) <= table_.size();
    }
    DeclaredFlags declared() const override { return {false, false, ordered_}; }
    bool totally_ordered() const override { return ordered_; }
    bool finite() const override { return true; }

    Element compose(const Element& a, const Element& b) const override {
        require_valid(a);
        require_valid(b);
        return Element::nat(table_[std::size_t(a.num()) - 1][std::size_t(b.num()) - 1]);
    }

    // finite carrier: every window is the whole semigroup
    std::vector<Element> window(int) const override {
        std::vector<Element> w;
        for (std::size_t i = 1; i <= table_.size(); ++i) w.push_back(Element::nat(std::int64_t(i)));
        return w;
    }

private:
    std::string id_;
    std::vector<std::vector<int>> table_;
    bool ordered_;
};

} // namespace

std::shared_ptr<const Semigroup> make_nat_add() {
    return std::make_shared<NatAdd>();
}
std::shared_ptr<const Semigroup> make_nat_min() {
    return std::make_shared<NatMin>();
}
std::shared_ptr<const Semigroup> make_nat_leftzero() {
    return std::make_shared<NatLeftZero>();
}
std::shared_ptr<const Semigroup> make_qpos_add() {
    return std::make_shared<QPosAdd>();
}
std::shared_ptr<const Semigroup> make_cayley(std::string id, std::vector<std::vector<int>> table, bool with_order) {
    return std::make_shared<Cayley>(std::move(id), std::move(table), with_order);
}

std::shared_ptr<const Semigroup> load_cayley_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open cayley table file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("cannot parse cayley table file '" + path + "': " + e.what());
    }
    if (!j.contains("size") || !j.contains("table")) throw ConfigError("cayley file needs {\"size\", \"table\"}");
    auto size = j.at("size").get<std::size_t>();
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    if (table.size() != size) throw ConfigError("cayley table size mismatch");
    return make_cayley("cayley:" + path, std::move(table));
}

std::shared_ptr<const Semigroup> make_semigroup(const std::string& selector) {
    if (selector == "nat-add") return make_nat_add();
    if (selector == "nat-min") return make_nat_min();
    if (selector == "nat-leftzero") return make_nat_leftzero();
    if (selector == "qpos-add") return make_qpos_add();
    if (selector.rfind("cayley:", 0) == 0) return load_cayley_file(selector.substr(7));
    throw ConfigError("unknown semigroup selector '" + selector + "'");
}

namespace {

// flatten (i,j,k) over a window of size w into one scan index
struct TripleSpace {
    std::size_t w;
    std::size_t size() const { return w * w * w; }
    void split(std::size_t idx, std::size_t& i, std::size_t& j, std::size_t& k) const {
        k = idx % w;
        j = (idx / w) % w;
        i = idx / (w * w);
    }
};

} // namespace

std::optional<TripleWitness> probe_right_cancellative(const Semigroup& sg, int m) {
    const std::vector<Element> w = sg.window(m);
    TripleSpace space{w.size()};
    auto found = kernels::find_first(space.size(), [&](std::size_t idx) {
        std::size_t i, j, k;
        space.split(idx, i, j, k);
        if (i == j) return false;
        return sg.compose(w[i], w[k]) == sg.compose(w[j], w[k]);
    });
    if (!found) return std::nullopt;
    std::size_t i, j, k;
    space.split(*found, i, j, k);
    return TripleWitness{w[i], w[j], w[k]};
}

std::optional<TripleWitness> probe_associative(const Semigroup& sg, int m) {
    const std::vector<Element> w = sg.window(m);
    TripleSpace space{w.size()};
    auto found = kernels::find_first(space.size(), [&](std::size_t idx) {
        std::size_t i, j, k;
        space.split(idx, i, j, k);
        return sg.compose(sg.compose(w[i], w[j]), w[k]) != sg.compose(w[i], sg.compose(w[j], w[k]));
    });
    if (!found) return std::nullopt;
    std::size_t i, j, k;
    space.split(*found, i, j, k);
    return TripleWitness{w[i], w[j], w[k]};
}

std::optional<TripleWitness> probe_order_compatibility(const Semigroup& sg, int m) {
    if (!sg.totally_ordered()) throw UnsupportedQuery("semigroup " + sg.id() + " carries no total order");
    const std::vector<Element> w = sg.window(m);
    TripleSpace space{w.size()};
    auto found = kernels::find_first(space.size(), [&](std::size_t idx) {
        std::size_t i, j, k;
        space.split(idx, i, j, k);
        if (i >= j) return false; // window is ascending, so i < j means s < t
        const Element &s = w[i], &t = w[j], &u = w[k];
        bool left = !(sg.compose(u, t) < sg.compose(u, s));
        bool right = !(sg.compose(t, u) < sg.compose(s, u));
        return !(left && right);
    });
    if (!found) return std::nullopt;
    std::size_t i, j, k;
    space.split(*found, i, j, k);
    return TripleWitness{w[i], w[j], w[k]};
}

} // namespace wsa
