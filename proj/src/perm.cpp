#include "wreath/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace wreath {

namespace {

void check_same_degree(const Perm& p, const Perm& q, const char* op) {
    if (p.degree() != q.degree())
        throw std::invalid_argument(std::string(op) + ": degree mismatch (" +
                                    std::to_string(p.degree()) + " vs " +
                                    std::to_string(q.degree()) + ")");
}

}  // namespace

Perm Perm::identity(std::size_t m) {
    if (m == 0) throw std::invalid_argument("Perm: degree must be at least 1");
    std::vector<uint32_t> img(m);
    std::iota(img.begin(), img.end(), 0u);
    return Perm(std::move(img));
}

Perm::Perm(std::vector<uint32_t> images) : images_(std::move(images)) {
    if (images_.empty()) throw std::invalid_argument("Perm: degree must be at least 1");
    std::vector<bool> seen(images_.size(), false);
    for (uint32_t v : images_) {
        if (v >= images_.size() || seen[v])
            throw std::invalid_argument("Perm: image array is not a bijection");
        seen[v] = true;
    }
}

bool Perm::is_identity() const {
    for (uint32_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

uint32_t Perm::first_moved() const {
    for (uint32_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i) return i;
    return static_cast<uint32_t>(images_.size());
}

Perm compose(const Perm& p, const Perm& q) {
    check_same_degree(p, q, "compose");
    std::vector<uint32_t> img(p.degree());
    for (uint32_t i = 0; i < img.size(); ++i) img[i] = q[p[i]];
    return Perm(std::move(img));
}

Perm inverse(const Perm& p) {
    std::vector<uint32_t> img(p.degree());
    for (uint32_t i = 0; i < img.size(); ++i) img[p[i]] = i;
    return Perm(std::move(img));
}

Perm conjugate(const Perm& p, const Perm& a) {
    check_same_degree(p, a, "conjugate");
    // a^-1 p a without forming intermediates: i -> a[p[a^-1[i]]], indexed as
    // img[a[j]] = a[p[j]].
    std::vector<uint32_t> img(p.degree());
    for (uint32_t j = 0; j < img.size(); ++j) img[a[j]] = a[p[j]];
    return Perm(std::move(img));
}

BigInt perm_order(const Perm& p) {
    BigInt ord = 1;
    std::vector<bool> seen(p.degree(), false);
    for (uint32_t i = 0; i < p.degree(); ++i) {
        if (seen[i]) continue;
        uint32_t len = 0, j = i;
        do {
            seen[j] = true;
            j = p[j];
            ++len;
        } while (j != i);
        BigInt l = len;
        ord = ord / gcd(ord, l) * l;
    }
    return ord;
}

std::vector<std::vector<uint32_t>> cycles(const Perm& p) {
    std::vector<std::vector<uint32_t>> out;
    std::vector<bool> seen(p.degree(), false);
    for (uint32_t i = 0; i < p.degree(); ++i) {
        if (seen[i] || p[i] == i) {
            seen[i] = true;
            continue;
        }
        std::vector<uint32_t> cyc;
        uint32_t j = i;
        do {
            seen[j] = true;
            cyc.push_back(j);
            j = p[j];
        } while (j != i);
        out.push_back(std::move(cyc));
    }
    return out;
}

std::vector<uint32_t> cycle_type(const Perm& p) {
    std::vector<uint32_t> type;
    std::vector<bool> seen(p.degree(), false);
    for (uint32_t i = 0; i < p.degree(); ++i) {
        if (seen[i]) continue;
        uint32_t len = 0, j = i;
        do {
            seen[j] = true;
            j = p[j];
            ++len;
        } while (j != i);
        type.push_back(len);
    }
    std::sort(type.begin(), type.end());
    return type;
}

std::string to_cycle_string(const Perm& p) {
    auto cycs = cycles(p);
    if (cycs.empty()) return "()";
    std::string out;
    for (const auto& cyc : cycs) {
        out += '(';
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(cyc[i]);
        }
        out += ')';
    }
    return out;
}

Perm parse_cycle_string(std::string_view text, std::size_t degree) {
    if (degree == 0) throw std::invalid_argument("parse_cycle_string: degree must be at least 1");
    std::vector<uint32_t> img(degree);
    std::iota(img.begin(), img.end(), 0u);
    std::vector<bool> used(degree, false);

    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };

    skip_ws();
    if (pos == text.size())
        throw std::invalid_argument("parse_cycle_string: empty input (identity is \"()\")");

    bool any = false;
    while (pos < text.size()) {
        if (text[pos] != '(')
            throw std::invalid_argument("parse_cycle_string: expected '(' at position " +
                                        std::to_string(pos));
        ++pos;
        std::vector<uint32_t> cyc;
        for (;;) {
            skip_ws();
            if (pos == text.size())
                throw std::invalid_argument("parse_cycle_string: unterminated cycle");
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[pos])))
                throw std::invalid_argument("parse_cycle_string: expected point or ')' at position " +
                                            std::to_string(pos));
            uint64_t v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                v = v * 10 + (text[pos] - '0');
                if (v >= degree)
                    throw std::invalid_argument("parse_cycle_string: point " + std::to_string(v) +
                                                " out of range for degree " + std::to_string(degree));
                ++pos;
            }
            if (used[v])
                throw std::invalid_argument("parse_cycle_string: point " + std::to_string(v) +
                                            " appears twice");
            used[v] = true;
            cyc.push_back(static_cast<uint32_t>(v));
        }
        for (std::size_t i = 0; i < cyc.size(); ++i) img[cyc[i]] = cyc[(i + 1) % cyc.size()];
        any = true;
        skip_ws();
    }
    if (!any) throw std::invalid_argument("parse_cycle_string: no cycles found");
    return Perm(std::move(img));
}

}  // namespace wreath
