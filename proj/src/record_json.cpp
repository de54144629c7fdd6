#include "clasper/record_json.hpp"

#include <json.hpp>

#include <limits>

namespace clasper {

using nlohmann::json;

namespace {

long long to_small(const Int& x, const char* what) {
    if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
        throw ClasperError(std::string(what) + " exceeds the JSON integer range");
    return static_cast<long long>(x);
}

std::string triple_key(const IndexTriple& t) {
    return std::to_string(t[0] + 1) + "," + std::to_string(t[1] + 1) + "," +
           std::to_string(t[2] + 1);
}

IndexTriple parse_triple_key(const std::string& key, std::size_t rank) {
    IndexTriple t{};
    std::size_t pos = 0;
    for (int slot = 0; slot < 3; ++slot) {
        std::size_t comma = slot < 2 ? key.find(',', pos) : key.size();
        if (comma == std::string::npos) throw ClasperError("cup key must be \"i,j,k\": " + key);
        long v = std::stol(key.substr(pos, comma - pos));
        if (v < 1 || static_cast<std::size_t>(v) > rank)
            throw ClasperError("cup index out of range in key " + key);
        t[slot] = static_cast<std::size_t>(v - 1);
        pos = comma + 1;
    }
    if (t[0] > t[1] || t[1] > t[2])
        throw ClasperError("cup key indices must satisfy i <= j <= k: " + key);
    return t;
}

}  // namespace

std::string offset_to_bits(const SpinSpace& s, SpinOffset offset) {
    std::string bits(s.dim(), '0');
    for (std::size_t b = 0; b < s.dim(); ++b)
        if ((offset >> b) & 1) bits[b] = '1';
    return bits;
}

SpinOffset bits_to_offset(const SpinSpace& s, const std::string& bits) {
    if (bits.size() != s.dim())
        throw ClasperError("spin bitstring must have length " + std::to_string(s.dim()));
    SpinOffset offset = 0;
    for (std::size_t b = 0; b < bits.size(); ++b) {
        if (bits[b] == '1')
            offset |= SpinOffset(1) << b;
        else if (bits[b] != '0')
            throw ClasperError("spin bitstring may contain only 0 and 1");
    }
    return offset;
}

std::string serialize_record(const InvariantRecord& r) {
    json doc;
    json orders = json::array();
    for (const Int& n : r.group.orders()) orders.push_back(to_small(n, "group order"));
    doc["group"]["orders"] = orders;

    json linking = json::array();
    for (const auto& row : r.linking.values) {
        json jrow = json::array();
        for (const QmodZ& v : row) jrow.push_back(v.str());
        linking.push_back(jrow);
    }
    doc["linking"] = linking;

    json quadratic = json::object();
    for (SpinOffset s = 0; s < r.spin.count(); ++s) {
        json vals = json::array();
        for (const QmodZ& v : r.quadratic[s].gen_values) vals.push_back(v.str());
        quadratic[offset_to_bits(r.spin, s)] = vals;
    }
    doc["quadratic"] = quadratic;

    json cup = json::object();
    for (const auto& [n, table] : r.cup) {
        json jtable = json::object();
        for (const auto& [t, v] : table) {
            Int reduced = mod_reduce(v, n);
            if (reduced != 0) jtable[triple_key(t)] = to_small(reduced, "cup value");
        }
        cup[n.str()] = jtable;
    }
    doc["cup"] = cup;

    json rochlin = json::object();
    for (SpinOffset s = 0; s < r.spin.count(); ++s)
        rochlin[offset_to_bits(r.spin, s)] = r.rochlin[s];
    doc["rochlin"] = rochlin;

    json moduli = json::array();
    for (const Int& n : r.moduli) moduli.push_back(to_small(n, "modulus"));
    doc["moduli"] = moduli;

    return doc.dump(2) + "\n";
}

InvariantRecord parse_record(const std::string& text) {
    json doc = json::parse(text);
    InvariantRecord r;

    std::vector<Int> orders;
    for (const auto& n : doc.at("group").at("orders")) orders.push_back(Int(n.get<long long>()));
    r.group = FgAbelianGroup(std::move(orders));
    r.spin = SpinSpace(r.group);

    const std::size_t t = r.group.torsion_indices().size();
    const auto& linking = doc.at("linking");
    if (linking.size() != t) throw ClasperError("linking matrix must have one row per torsion generator");
    for (const auto& row : linking) {
        std::vector<QmodZ> vals;
        for (const auto& v : row) vals.push_back(QmodZ::parse(v.get<std::string>()));
        r.linking.values.push_back(std::move(vals));
    }

    const auto& quadratic = doc.at("quadratic");
    r.quadratic.resize(r.spin.count());
    if (quadratic.size() != r.spin.count())
        throw ClasperError("quadratic must have one entry per spin structure");
    for (const auto& [bits, vals] : quadratic.items()) {
        QuadFn q;
        for (const auto& v : vals) q.gen_values.push_back(QmodZ::parse(v.get<std::string>()));
        r.quadratic[bits_to_offset(r.spin, bits)] = std::move(q);
    }

    for (const auto& n : doc.at("moduli")) r.moduli.push_back(Int(n.get<long long>()));

    const auto& cup = doc.at("cup");
    for (const auto& [key, table] : cup.items()) {
        Int n(key);
        CupTable parsed;
        for (const auto& [tk, v] : table.items()) {
            Int reduced = mod_reduce(Int(v.get<long long>()), n);
            if (reduced != 0) parsed[parse_triple_key(tk, r.group.rank())] = reduced;
        }
        r.cup[n] = std::move(parsed);
    }

    const auto& rochlin = doc.at("rochlin");
    r.rochlin.assign(r.spin.count(), 0);
    if (rochlin.size() != r.spin.count())
        throw ClasperError("rochlin must have one entry per spin structure");
    for (const auto& [bits, v] : rochlin.items())
        r.rochlin[bits_to_offset(r.spin, bits)] = v.get<int>();

    return r;
}

std::vector<FormalYGraph> parse_graphs(const std::string& text, const PullbackP& p) {
    json doc = json::parse(text);
    if (!doc.is_array()) throw ClasperError("graph file must be a JSON array");
    const SpinSpace& space = p.space();
    const std::size_t rank = space.homology().rank();
    std::vector<FormalYGraph> out;
    for (const auto& item : doc) {
        int sign = item.at("sign").get<int>();
        const auto& leaves = item.at("leaves");
        if (leaves.size() != 3) throw ClasperError("a Y-graph needs exactly three leaves");
        std::array<GroupElement, 3> parsed{p.pair().group.zero(), p.pair().group.zero(),
                                           p.pair().group.zero()};
        for (std::size_t i = 0; i < 3; ++i) {
            const auto& leaf = leaves[i];
            if (leaf.size() != 2) throw ClasperError("a leaf is [[h-coeffs],[c, slope-coeffs]]");
            std::vector<Int> h;
            for (const auto& v : leaf[0]) h.push_back(Int(v.get<long long>()));
            if (h.size() != rank) throw ClasperError("leaf class needs one coefficient per generator");
            const auto& fn = leaf[1];
            if (fn.size() != rank + 1)
                throw ClasperError("leaf function is [c, slope_1, ..., slope_r]");
            int c = fn[0].get<int>();
            std::vector<Int> slope;
            for (std::size_t j = 1; j < fn.size(); ++j) slope.push_back(Int(fn[j].get<long long>()));
            parsed[i] = p.compose(space.homology().element(std::move(h)),
                                  AffineFn(space, c, std::move(slope)));
        }
        out.push_back(FormalYGraph(p, sign, std::move(parsed)));
    }
    return out;
}

std::string serialize_certificate(const Certificate& cert, const InvariantRecord& r,
                                  const InvariantRecord& rp) {
    json doc;
    doc["mode"] = mode_name(cert.mode);
    json psi = json::array();
    for (const GroupElement& im : cert.psi.images()) {
        json col = json::array();
        for (const Int& c : im.coeffs()) col.push_back(to_small(c, "certificate entry"));
        psi.push_back(col);
    }
    doc["psi"] = psi;
    if (cert.mode == DecideMode::y2_plain)
        doc["offset"] = offset_to_bits(r.spin, cert.offset);
    else {
        doc["sigma"] = offset_to_bits(r.spin, cert.sigma);
        doc["sigma-prime"] = offset_to_bits(rp.spin, cert.sigma_prime);
    }
    json moduli = json::array();
    for (const Int& n : cert.moduli_checked) moduli.push_back(to_small(n, "modulus"));
    doc["moduli-checked"] = moduli;
    return doc.dump(2) + "\n";
}

std::vector<Homomorphism> parse_candidates(const std::string& text, const FgAbelianGroup& src,
                                           const FgAbelianGroup& dst) {
    json doc = json::parse(text);
    if (!doc.is_array()) throw ClasperError("candidate file must be a JSON array of matrices");
    std::vector<Homomorphism> out;
    for (const auto& mat : doc) {
        if (mat.size() != src.rank())
            throw ClasperError("candidate needs one image column per source generator");
        std::vector<GroupElement> images;
        for (const auto& col : mat) {
            std::vector<Int> c;
            for (const auto& v : col) c.push_back(Int(v.get<long long>()));
            images.push_back(dst.element(std::move(c)));
        }
        out.push_back(Homomorphism(src, dst, std::move(images)));
    }
    return out;
}

}  // namespace clasper
