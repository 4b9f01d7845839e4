#include "narop/trees.hpp"

#include <stdexcept>

#include "narop/errors.hpp"

namespace narop {

namespace {

void validate_code(long n, const std::vector<std::uint8_t>& code) {
    if (n < 2) throw std::invalid_argument("tree arity must be >= 2");
    long open = 1; // slots still to fill
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (open == 0) throw std::invalid_argument("tree code has trailing symbols");
        if (code[i] > 1) throw std::invalid_argument("tree code symbols must be 0 or 1");
        open += code[i] ? n - 1 : -1;
    }
    if (open != 0) throw std::invalid_argument("tree code is incomplete");
}

} // namespace

PlanarTree::PlanarTree(long n, std::vector<std::uint8_t> code)
    : n_(n), code_(std::move(code)) {
    validate_code(n_, code_);
}

PlanarTree PlanarTree::leaf(long n) { return PlanarTree(n, {0}); }

PlanarTree PlanarTree::corolla(long n) {
    std::vector<std::uint8_t> code(static_cast<std::size_t>(n) + 1, 0);
    code[0] = 1;
    return PlanarTree(n, std::move(code));
}

long PlanarTree::internal_count() const {
    long p = 0;
    for (auto c : code_) p += c;
    return p;
}

long PlanarTree::arity() const { return static_cast<long>(code_.size()) - internal_count(); }

std::string PlanarTree::code_string() const {
    std::string s;
    s.reserve(code_.size());
    for (auto c : code_) s.push_back(c ? '1' : '0');
    return s;
}

PlanarTree PlanarTree::from_code_string(long n, const std::string& s) {
    std::vector<std::uint8_t> code;
    code.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') throw std::invalid_argument("tree code string must be over {0,1}");
        code.push_back(c == '1');
    }
    return PlanarTree(n, std::move(code));
}

namespace {

void bracket_walk(const std::vector<std::uint8_t>& code, long n, std::size_t& pos,
                  std::string& out) {
    if (code[pos++]) {
        out += "(";
        for (long i = 0; i < n; ++i) bracket_walk(code, n, pos, out);
        out += ")";
    } else {
        out += "·";
    }
}

} // namespace

std::string PlanarTree::bracket() const {
    std::string out;
    std::size_t pos = 0;
    bracket_walk(code_, n_, pos, out);
    return out;
}

Integer fuss_catalan(long n, long p) {
    if (n < 2 || p < 0) throw std::invalid_argument("fuss_catalan needs n >= 2, p >= 0");
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n * p), static_cast<unsigned long>(p));
    Integer r;
    mpz_divexact_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(p * (n - 1) + 1));
    return r;
}

namespace {

// Backtracking generator: emits every valid code with exactly `internals`
// internal vertices, in lexicographic (0 < 1) order.
void gen_codes(long n, long internals, long open, std::vector<std::uint8_t>& cur,
               std::vector<PlanarTree>& out) {
    if (open == 0) {
        out.emplace_back(n, cur);
        return;
    }
    if (internals == 0 || open >= 2) { // a leaf must leave room for the rest
        cur.push_back(0);
        gen_codes(n, internals, open - 1, cur, out);
        cur.pop_back();
    }
    if (internals > 0) {
        cur.push_back(1);
        gen_codes(n, internals - 1, open + n - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<PlanarTree> enumerate_trees(long n, long p, const ResourceLimits& limits) {
    if (n < 2 || p < 0) throw std::invalid_argument("enumerate_trees needs n >= 2, p >= 0");
    const Integer count = fuss_catalan(n, p);
    if (count > limits.max_trees)
        throw resource_limit_error("tree basis size " + count.get_str() +
                                   " exceeds the cap of " + std::to_string(limits.max_trees) +
                                   " trees");
    std::vector<PlanarTree> out;
    out.reserve(count.get_ui());
    std::vector<std::uint8_t> cur;
    gen_codes(n, p, 1, cur, out);
    return out;
}

SignedTree graft(const PlanarTree& host, long leaf_index, const PlanarTree& guest,
                 DegreeParity parity) {
    if (host.n() != guest.n())
        throw std::invalid_argument("graft requires matching arities");
    if (leaf_index < 0 || leaf_index >= host.arity())
        throw std::out_of_range("graft leaf index out of range");
    const auto& hc = host.code();
    std::size_t pos = 0;
    for (long seen = -1; pos < hc.size(); ++pos) {
        if (hc[pos] == 0 && ++seen == leaf_index) break;
    }
    std::vector<std::uint8_t> code;
    code.reserve(hc.size() + guest.code().size() - 1);
    code.insert(code.end(), hc.begin(), hc.begin() + static_cast<std::ptrdiff_t>(pos));
    code.insert(code.end(), guest.code().begin(), guest.code().end());
    code.insert(code.end(), hc.begin() + static_cast<std::ptrdiff_t>(pos) + 1, hc.end());

    int sign = 1;
    if (parity == DegreeParity::Odd) {
        long host_after = 0;
        for (std::size_t i = pos + 1; i < hc.size(); ++i) host_after += hc[i];
        if ((host_after * guest.internal_count()) % 2 != 0) sign = -1;
    }
    return SignedTree{PlanarTree(host.n(), std::move(code)), sign};
}

void TreeVector::add(const PlanarTree& t, const Rational& c) {
    if (sgn(c) == 0) return;
    if (!terms_.empty()) {
        const PlanarTree& ref = terms_.begin()->first;
        if (ref.n() != t.n() || ref.internal_count() != t.internal_count())
            throw std::invalid_argument("tree vector terms must share (n, p)");
    }
    auto [it, inserted] = terms_.emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

} // namespace narop
