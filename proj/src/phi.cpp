#include "cyclenum/phi.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace cyclenum {

namespace {

std::size_t slot(int variable) { return static_cast<std::size_t>(variable - 1); }

void check_indices(PhiIndices idx, int variables) {
    for (int v : {idx.a, idx.b, idx.c}) {
        if (v < 1 || v > variables) {
            throw std::invalid_argument("Phi index " + std::to_string(v) + " outside 1.." + std::to_string(variables));
        }
    }
    if (idx.b == idx.c) throw std::invalid_argument("Phi_{a,b,c} requires b != c");
}

// The preimage set I_{a,b,c}(i) of an output exponent i is a run of
// consecutive cells on one line of the input: cells base + t*e_u + (total-t)*e_v
// for t in [lo, hi).
struct PreimageLine {
    Exponents base;  // zero at u and v
    int u;
    int v;
    int total;
    int lo;
    int hi;
};

PreimageLine preimage_line(PhiIndices idx, const Exponents& i) {
    const auto a = slot(idx.a), b = slot(idx.b), c = slot(idx.c);
    PreimageLine line{i, 0, 0, 0, 0, 0};
    if (a == b) {
        // i'_a in [0, i_a), i'_c = i_c + i_a - 1 - i'_a
        line.u = idx.a;
        line.v = idx.c;
        line.base[a] = 0;
        line.base[c] = 0;
        line.total = i[a] + i[c] - 1;
        line.hi = i[a];
    } else if (a == c) {
        // i'_c in [i_b, i_b + i_c), i'_b = i_b + i_c - 1 - i'_c
        line.u = idx.c;
        line.v = idx.b;
        line.base[b] = 0;
        line.base[c] = 0;
        line.total = i[b] + i[c] - 1;
        line.lo = i[b];
        line.hi = i[b] + i[c];
    } else {
        // i'_a in [0, i_a), i'_b = i_a - 1 - i'_a, i'_c = i_b + i_c
        line.u = idx.a;
        line.v = idx.b;
        line.base[a] = 0;
        line.base[b] = 0;
        line.base[c] = i[b] + i[c];
        line.total = i[a] - 1;
        line.hi = i[a];
    }
    return line;
}

Exponents point_on(const PreimageLine& line, int t) {
    Exponents e = line.base;
    e[slot(line.u)] = t;
    e[slot(line.v)] = line.total - t;
    return e;
}

}  // namespace

HomoPoly phi(PhiIndices idx, const HomoPoly& p) {
    check_indices(idx, p.variables());
    const auto a = slot(idx.a), b = slot(idx.b), c = slot(idx.c);
    HomoPoly out(p.variables(), p.degree() + 1);
    const auto exps = p.exponent_list();
    const auto coeffs = p.coefficients();
    for (std::size_t t = 0; t < exps.size(); ++t) {
        if (coeffs[t] == 0) continue;
        const Exponents& e = exps[t];
        Exponents head = e;
        head[b] = 0;
        head[c] = 0;
        head[a] += e[b] + 1;
        for (int k = 0; k <= e[c]; ++k) {
            Exponents term = head;
            term[b] += e[c] - k;
            term[c] += k;
            out[term] += coeffs[t];
        }
    }
    return out;
}

HomoPoly phi_index_form(PhiIndices idx, const HomoPoly& p) {
    check_indices(idx, p.variables());
    HomoPoly out(p.variables(), p.degree() + 1);
    const auto exps = out.exponent_list();
    auto coeffs = out.coefficients();
    for (std::size_t t = 0; t < exps.size(); ++t) {
        const auto line = preimage_line(idx, exps[t]);
        BigCount total = 0;
        for (int s = line.lo; s < line.hi; ++s) total += p[point_on(line, s)];
        coeffs[t] = std::move(total);
    }
    return out;
}

HomoPoly phi_prefix(PhiIndices idx, const HomoPoly& p) {
    check_indices(idx, p.variables());
    HomoPoly out(p.variables(), p.degree() + 1);
    const auto exps = out.exponent_list();
    auto coeffs = out.coefficients();

    // prefix[key][t] = sum of the first t cells of the line identified by key
    std::unordered_map<std::uint64_t, std::vector<BigCount>> prefix;
    const auto radix = static_cast<std::uint64_t>(out.degree()) + 2;
    auto key_of = [&](const PreimageLine& line) {
        std::uint64_t key = 0;
        for (int l = p.variables() - 1; l >= 0; --l) key = key * radix + static_cast<std::uint64_t>(line.base[static_cast<std::size_t>(l)]);
        return key;
    };

    for (std::size_t t = 0; t < exps.size(); ++t) {
        const auto line = preimage_line(idx, exps[t]);
        if (line.hi <= line.lo) continue;
        auto [it, fresh] = prefix.try_emplace(key_of(line));
        auto& sums = it->second;
        if (fresh) {
            sums.resize(static_cast<std::size_t>(line.total) + 2);
            sums[0] = 0;
            for (int s = 0; s <= line.total; ++s) {
                sums[static_cast<std::size_t>(s) + 1] = sums[static_cast<std::size_t>(s)] + p[point_on(line, s)];
            }
        }
        coeffs[t] = sums[static_cast<std::size_t>(line.hi)] - sums[static_cast<std::size_t>(line.lo)];
    }
    return out;
}

HomoPoly apply_phi(PhiKernel kernel, PhiIndices idx, const HomoPoly& p) {
    switch (kernel) {
        case PhiKernel::Prefix: return phi_prefix(idx, p);
        case PhiKernel::Expand: return phi(idx, p);
        case PhiKernel::IndexForm: return phi_index_form(idx, p);
    }
    throw std::logic_error("unknown Phi kernel");
}

}  // namespace cyclenum
