#include "clasper/invariants.hpp"

#include <algorithm>
#include <sstream>

namespace clasper {

QmodZ::QmodZ(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ <= 0) throw ClasperError("fraction denominator must be positive");
    num_ = mod_reduce(num_, den_);
    Int g = gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

QmodZ QmodZ::operator+(const QmodZ& other) const {
    return QmodZ(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

QmodZ QmodZ::operator-(const QmodZ& other) const {
    return QmodZ(num_ * other.den_ - other.num_ * den_, den_ * other.den_);
}

QmodZ QmodZ::operator*(const Int& scalar) const { return QmodZ(num_ * scalar, den_); }

bool QmodZ::operator<(const QmodZ& other) const {
    return num_ * other.den_ < other.num_ * den_;
}

std::string QmodZ::str() const { return num_.str() + "/" + den_.str(); }

QmodZ QmodZ::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) throw ClasperError("fraction must look like a/b: " + text);
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    QmodZ q(num, den);
    if (q.str() != text) throw ClasperError("fraction not in canonical form: " + text);
    return q;
}

QmodZ LinkingPairing::eval(const std::vector<Int>& x, const std::vector<Int>& y) const {
    QmodZ acc;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < values.size(); ++j)
            if (y[j] != 0) acc = acc + values[i][j] * (x[i] * y[j]);
    }
    return acc;
}

QmodZ quad_value(const LinkingPairing& lambda, const QuadFn& q, const std::vector<Int>& x) {
    if (x.size() != q.gen_values.size())
        throw GroupMismatchError("torsion coefficient count mismatch in quad_value");
    QmodZ acc;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        acc = acc + q.gen_values[i] * x[i];
        acc = acc + lambda.values[i][i] * (x[i] * (x[i] - 1) / 2);
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (x[j] != 0) acc = acc + lambda.values[i][j] * (x[i] * x[j]);
    }
    return acc;
}

std::vector<Int> default_moduli(const FgAbelianGroup& g) {
    std::vector<Int> out{0, 2};
    for (const Int& d : divisors(g.torsion_exponent()))
        if (d > 1 && d != 2) out.push_back(d);
    std::sort(out.begin(), out.end());
    return out;
}

Int cup_entry(const InvariantRecord& r, const Int& n, std::size_t a, std::size_t b,
              std::size_t c) {
    auto it = r.cup.find(n);
    if (it == r.cup.end()) throw ModulusMismatchError("modulus not configured: " + n.str());
    int sign = 1;
    std::size_t i = a, j = b, k = c;
    if (i > j) { std::swap(i, j); sign = -sign; }
    if (j > k) { std::swap(j, k); sign = -sign; }
    if (i > j) { std::swap(i, j); sign = -sign; }
    auto entry = it->second.find({i, j, k});
    if (entry == it->second.end()) return 0;
    return mod_reduce(sign < 0 ? -entry->second : entry->second, n);
}

Int cup_eval(const InvariantRecord& r, const Int& n, const GroupElement& y1,
             const GroupElement& y2, const GroupElement& y3) {
    const std::size_t rk = r.group.rank();
    Int acc = 0;
    for (std::size_t a = 0; a < rk; ++a) {
        if (y1.coeffs()[a] == 0) continue;
        for (std::size_t b = 0; b < rk; ++b) {
            if (y2.coeffs()[b] == 0) continue;
            for (std::size_t c = 0; c < rk; ++c) {
                if (y3.coeffs()[c] == 0) continue;
                Int e = cup_entry(r, n, a, b, c);
                if (e != 0) acc += y1.coeffs()[a] * y2.coeffs()[b] * y3.coeffs()[c] * e;
            }
        }
    }
    return mod_reduce(acc, n);
}

namespace {

// Coefficient of the dual reduction H^(m) -> H^(n) on the b-th generator:
// rho(e_b*) = c * e_b* with c * unit(n, n_b) = unit(m, n_b) mod n.
Int dual_reduction_coeff(const Int& n, const Int& m, const Int& order_b) {
    Int val = m == 0 ? pairing_unit(Int(0), order_b) : pairing_unit(m, order_b);
    val = mod_reduce(val, n);
    Int unit = pairing_unit(n, order_b);
    if (val % unit != 0) throw ClasperError("dual reduction coefficient not integral");
    return (val / unit) % gcd(n, order_b);
}

void check_cup_table(const InvariantRecord& r, const Int& n, const CupTable& table,
                     std::vector<std::string>& out) {
    const auto& orders = r.group.orders();
    for (const auto& [t, v] : table) {
        std::string where = "cup[" + n.str() + "] entry (" + std::to_string(t[0] + 1) + "," +
                            std::to_string(t[1] + 1) + "," + std::to_string(t[2] + 1) + ")";
        if (t[0] > t[1] || t[1] > t[2] || t[2] >= r.group.rank()) {
            out.push_back(where + ": indices must satisfy i <= j <= k within the group");
            continue;
        }
        bool diagonal = t[0] == t[1] || t[1] == t[2];
        if (n == 0) {
            for (std::size_t s : {t[0], t[1], t[2]})
                if (orders[s] > 0 && v != 0)
                    out.push_back(where + ": integer form must vanish on torsion duals");
            if (diagonal && v != 0)
                out.push_back(where + ": diagonal integer entries must vanish (2v = 0)");
        } else {
            if (v < 0 || v >= n) out.push_back(where + ": value " + v.str() + " not reduced mod " + n.str());
            for (std::size_t s : {t[0], t[1], t[2]})
                if (mod_reduce(gcd(n, orders[s]) * v, n) != 0)
                    out.push_back(where + ": value " + v.str() +
                                  " not annihilated by the dual generator order gcd(" + n.str() +
                                  "," + orders[s].str() + ")");
            if (diagonal && mod_reduce(2 * v, n) != 0)
                out.push_back(where + ": diagonal entry needs 2v = 0, got v = " + v.str());
        }
        if (v == 0) out.push_back(where + ": zero entries must be omitted");
    }
}

}  // namespace

std::vector<std::string> validate_record(const InvariantRecord& r) {
    std::vector<std::string> out;
    if (r.spin.homology() != r.group) {
        out.push_back("spin space not derived from the record's group");
        return out;
    }
    const auto torsion = r.group.torsion_indices();
    const std::size_t t = torsion.size();
    const SpinOffset spins = r.spin.count();

    // linking pairing shape, symmetry, order compatibility
    if (r.linking.values.size() != t)
        out.push_back("linking matrix must be " + std::to_string(t) + "x" + std::to_string(t));
    else {
        for (std::size_t i = 0; i < t; ++i)
            if (r.linking.values[i].size() != t) {
                out.push_back("linking matrix row " + std::to_string(i + 1) + " has wrong length");
                return out;
            }
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < t; ++j) {
                if (r.linking.values[i][j] != r.linking.values[j][i])
                    out.push_back("linking pairing not symmetric at (" + std::to_string(i + 1) +
                                  "," + std::to_string(j + 1) + ")");
                Int g = gcd(r.group.orders()[torsion[i]], r.group.orders()[torsion[j]]);
                if (g % r.linking.values[i][j].den() != 0)
                    out.push_back("linking value " + r.linking.values[i][j].str() + " at (" +
                                  std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                  ") not annihilated by the generator orders");
            }
        // nondegeneracy, exhaustively over the torsion subgroup
        std::vector<Int> torsion_orders;
        for (std::size_t i : torsion) torsion_orders.push_back(r.group.orders()[i]);
        FgAbelianGroup torsion_group(torsion_orders);
        ElementRange range(torsion_group);
        while (auto x = range.next()) {
            if (x->is_zero()) continue;
            bool pairs_nontrivially = false;
            for (std::size_t j = 0; j < t && !pairs_nontrivially; ++j) {
                std::vector<Int> ej(t);
                ej[j] = 1;
                if (!r.linking.eval(x->coeffs(), ej).is_zero()) pairs_nontrivially = true;
            }
            if (!pairs_nontrivially) {
                std::ostringstream ss;
                ss << "degenerate pairing: torsion element (";
                for (std::size_t i = 0; i < t; ++i) ss << (i ? "," : "") << x->coeffs()[i];
                ss << ") pairs to zero with every generator";
                out.push_back(ss.str());
                break;
            }
        }
    }

    // quadratic functions: one per spin structure, closure + pairing identity
    if (SpinOffset(r.quadratic.size()) != spins)
        out.push_back("need one quadratic function per spin structure");
    else {
        for (SpinOffset s = 0; s < spins; ++s) {
            const QuadFn& q = r.quadratic[s];
            if (q.gen_values.size() != t) {
                out.push_back("quadratic function " + std::to_string(s) + " has wrong length");
                continue;
            }
            bool closure_ok = true;
            for (std::size_t i = 0; i < t; ++i) {
                const Int& ni = r.group.orders()[torsion[i]];
                QmodZ closure = q.gen_values[i] * ni +
                                r.linking.values[i][i] * (ni * (ni - 1) / 2);
                if (!closure.is_zero()) {
                    closure_ok = false;
                    out.push_back("closure fails for spin " + std::to_string(s) +
                                  ", generator " + std::to_string(i + 1) + ": n*q(e) + C(n,2)*lambda(e,e) = " +
                                  closure.str());
                }
            }
            if (!closure_ok) continue;
            // q(x+y) - q(x) - q(y) = lambda(x, y), exhaustively
            std::vector<Int> torsion_orders;
            for (std::size_t i : torsion) torsion_orders.push_back(r.group.orders()[i]);
            FgAbelianGroup tg(torsion_orders);
            std::vector<GroupElement> elems = all_elements(tg);
            bool refines = true;
            for (std::size_t xi = 0; xi < elems.size() && refines; ++xi)
                for (std::size_t yi = 0; yi < elems.size() && refines; ++yi) {
                    const GroupElement& x = elems[xi];
                    const GroupElement& y = elems[yi];
                    QmodZ lhs = quad_value(r.linking, q, (x + y).coeffs()) -
                                quad_value(r.linking, q, x.coeffs()) -
                                quad_value(r.linking, q, y.coeffs());
                    if (lhs != r.linking.eval(x.coeffs(), y.coeffs())) {
                        out.push_back("quadratic function " + std::to_string(s) +
                                      " does not refine the linking pairing");
                        refines = false;
                    }
                }
        }
    }

    // cup tables: configured moduli exactly, entry constraints, naturality
    {
        std::vector<Int> keys;
        for (const auto& [n, table] : r.cup) keys.push_back(n);
        std::vector<Int> want = r.moduli;
        if (keys != want) out.push_back("cup table moduli differ from the configured set");
        if (!std::is_sorted(want.begin(), want.end()) ||
            std::adjacent_find(want.begin(), want.end()) != want.end())
            out.push_back("configured moduli must be sorted and distinct");
        for (const Int& n : want)
            if (n < 0) out.push_back("negative modulus configured");
        for (const auto& [n, table] : r.cup) check_cup_table(r, n, table, out);
        // reduction naturality for configured n | m
        for (const Int& n : want) {
            if (n <= 0) continue;
            for (const Int& m : want) {
                if (m == n) continue;
                if (m != 0 && m % n != 0) continue;
                if (r.cup.find(n) == r.cup.end() || r.cup.find(m) == r.cup.end()) continue;
                const std::size_t rk = r.group.rank();
                std::vector<Int> coeff(rk);
                for (std::size_t b = 0; b < rk; ++b)
                    coeff[b] = dual_reduction_coeff(n, m, r.group.orders()[b]);
                for (std::size_t a = 0; a < rk; ++a)
                    for (std::size_t b = a; b < rk; ++b)
                        for (std::size_t c = b; c < rk; ++c) {
                            Int lhs = mod_reduce(
                                coeff[a] * coeff[b] * coeff[c] * cup_entry(r, n, a, b, c), n);
                            Int rhs = mod_reduce(cup_entry(r, m, a, b, c), n);
                            if (lhs != rhs)
                                out.push_back("cup reduction naturality fails between moduli " +
                                              n.str() + " | " + m.str() + " at (" +
                                              std::to_string(a + 1) + "," + std::to_string(b + 1) +
                                              "," + std::to_string(c + 1) + ")");
                        }
            }
        }
    }

    // Rochlin function
    if (SpinOffset(r.rochlin.size()) != spins)
        out.push_back("need one Rochlin value per spin structure");
    for (std::size_t i = 0; i < r.rochlin.size(); ++i)
        if (r.rochlin[i] < 0 || r.rochlin[i] > 15)
            out.push_back("Rochlin value out of Z16 range at spin " + std::to_string(i));

    return out;
}

bool BElement::is_zero() const {
    for (const auto& [n, table] : tables)
        if (!table.empty()) return false;
    return std::all_of(rochlin.begin(), rochlin.end(), [](int v) { return v == 0; });
}

BElement b_zero(const InvariantRecord& shape) {
    BElement out;
    out.moduli = shape.moduli;
    for (const Int& n : shape.moduli) out.tables[n] = {};
    out.rochlin.assign(shape.spin.count(), 0);
    return out;
}

namespace {

BElement b_combine(const BElement& x, const BElement& y, int sign) {
    if (x.moduli != y.moduli || x.rochlin.size() != y.rochlin.size())
        throw ClasperError("B-element shape mismatch");
    BElement out = x;
    for (const auto& [n, table] : y.tables) {
        CupTable& dst = out.tables[n];
        for (const auto& [t, v] : table) {
            Int next = mod_reduce(dst[t] + sign * v, n);
            if (next == 0)
                dst.erase(t);
            else
                dst[t] = next;
        }
    }
    for (std::size_t i = 0; i < out.rochlin.size(); ++i)
        out.rochlin[i] = ((out.rochlin[i] + sign * y.rochlin[i]) % 16 + 16) % 16;
    return out;
}

}  // namespace

BElement b_add(const BElement& x, const BElement& y) { return b_combine(x, y, 1); }
BElement b_subtract(const BElement& x, const BElement& y) { return b_combine(x, y, -1); }

}  // namespace clasper
