#include "strathom/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace strathom {

namespace {

[[noreturn]] void bad(const std::string& why) { throw Error(ErrorKind::parse, why); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) bad(std::string("expected an object holding '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing '") + key + "'");
    return *it;
}

template <class T>
T get(const Json& j, const std::string& what) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception&) {
        bad(what + " has the wrong type");
    }
}

Json element(const Poset& P, int p) {
    if (P.numeric_names()) return std::stol(P.name(p));
    return P.name(p);
}

int element(const Poset& P, const Json& j) {
    std::string name;
    if (j.is_number_integer()) name = std::to_string(j.get<long>());
    else if (j.is_string()) name = j.get<std::string>();
    else bad("poset element must be a string or an integer");
    if (!P.contains(name)) throw Error(ErrorKind::poset, "unknown poset element '" + name + "'");
    return P.id(name);
}

Json word_pair(const Word& w, const std::string& id) { return Json::array({w, id}); }

IdSimplex id_simplex(const Json& j) {
    if (!j.is_array() || j.size() != 2) bad("simplex must be [degword, cellid]");
    return {get<Word>(j[0], "degeneracy word"), get<std::string>(j[1], "cell id")};
}

std::vector<char> id_mask(const Json& j, const SSet& B, const char* what) {
    std::vector<char> m(B.size(), 0);
    for (const auto& id : j) m[B.index(get<std::string>(id, what))] = 1;
    return m;
}

Json mask_ids(const SSet& B, const std::vector<char>& m) {
    Json a = Json::array();
    for (int c = 0; c < B.size(); ++c)
        if (m[c]) a.push_back(B.id(c));
    return a;
}

const char* dir_name(Leg::Dir d) { return d == Leg::Dir::forward ? "forward" : "backward"; }

}  // namespace

Json to_json(const Poset& P) {
    Json j;
    j["elements"] = Json::array();
    for (int p = 0; p < P.size(); ++p) j["elements"].push_back(element(P, p));
    j["leq"] = Json::array();
    for (const auto& [a, b] : P.input_relation()) j["leq"].push_back(Json::array({element(P, a), element(P, b)}));
    return j;
}

Poset poset_from_json(const Json& j) {
    std::vector<std::string> names;
    for (const auto& e : field(j, "elements")) {
        if (e.is_number_integer()) names.push_back(std::to_string(e.get<long>()));
        else names.push_back(get<std::string>(e, "poset element"));
    }
    std::vector<std::pair<std::string, std::string>> rel;
    for (const auto& r : field(j, "leq")) {
        if (!r.is_array() || r.size() != 2) bad("leq entries must be pairs");
        auto name = [](const Json& e) { return e.is_number_integer() ? std::to_string(e.get<long>()) : get<std::string>(e, "poset element"); };
        rel.emplace_back(name(r[0]), name(r[1]));
    }
    Poset P(std::move(names), rel);
    bool numeric = !j["elements"].empty();
    for (const auto& e : j["elements"]) numeric = numeric && e.is_number_integer();
    P.set_numeric_names(numeric);
    return P;
}

Json to_json(const SSet& X) {
    Json j;
    j["poset"] = to_json(X.poset());
    j["cells"] = Json::array();
    for (int c = 0; c < X.size(); ++c) {
        Json cell;
        cell["id"] = X.id(c);
        cell["dim"] = X.dim(c);
        cell["faces"] = Json::array();
        for (const auto& f : X.cell(c).faces) cell["faces"].push_back(word_pair(word_of(f.eta), X.id(f.cell)));
        j["cells"].push_back(std::move(cell));
    }
    Json labels = Json::object();
    std::vector<int> order = X.label_order();
    if (order.empty())
        for (int c = 0; c < X.size(); ++c)
            if (X.dim(c) == 0) order.push_back(c);
    for (int v : order) labels[X.id(v)] = element(X.poset(), X.label(v));
    j["vertex_label"] = std::move(labels);
    return j;
}

SSet sset_from_json(const Json& j) {
    SSet X(poset_from_json(field(j, "poset")));
    const Json& cells = field(j, "cells");
    if (!cells.is_array()) bad("'cells' must be an array");
    std::unordered_map<std::string, int> at;
    std::vector<int> dims;
    for (const auto& c : cells) {
        std::string id = get<std::string>(field(c, "id"), "cell id");
        if (!at.emplace(id, static_cast<int>(dims.size())).second)
            throw Error(ErrorKind::identifier, "duplicate cell id '" + id + "'");
        dims.push_back(get<int>(field(c, "dim"), "dim"));
    }
    const Json& vl = field(j, "vertex_label");
    std::vector<int> order;
    for (const auto& [vid, p] : vl.items()) {
        auto it = at.find(vid);
        if (it == at.end() || dims[it->second] != 0) throw Error(ErrorKind::identifier, "'" + vid + "' labelled but not a vertex");
        order.push_back(it->second);
    }
    for (size_t c = 0; c < cells.size(); ++c) {
        const std::string id = cells[c]["id"];
        std::vector<Simplex> faces;
        for (const auto& f : field(cells[c], "faces")) {
            IdSimplex s = id_simplex(f);
            auto it = at.find(s.cell);
            if (it == at.end()) throw Error(ErrorKind::closure, "cell '" + id + "' names unknown face '" + s.cell + "'");
            const int fd = dims[c] - 1;
            for (size_t i = 0; i < s.word.size(); ++i)
                if (s.word[i] < 0 || s.word[i] >= fd || (i && s.word[i] >= s.word[i - 1]))
                    bad("cell '" + id + "': degeneracy word must be strictly decreasing and in range");
            faces.push_back(Simplex{fd >= 0 ? surj_of(s.word, fd) : Mono{}, it->second});
        }
        int label = -1;
        if (dims[c] == 0) {
            auto it = vl.find(id);
            if (it == vl.end()) throw Error(ErrorKind::poset, "vertex '" + id + "' has no label");
            label = element(X.poset(), *it);
        }
        X.add_cell(id, dims[c], std::move(faces), label);
    }
    X.set_label_order(order);
    X.finalize();
    return X;
}

Json map_to_json(const SSet& X, const SSet& Y, const SMap& f) {
    Json a = Json::object();
    for (int c = 0; c < X.size(); ++c) a[X.id(c)] = word_pair(word_of(f.img[c].eta), Y.id(f.img[c].cell));
    return Json{{"assign", std::move(a)}};
}

SMap map_from_json(const Json& j, const SSet& X, const SSet& Y) {
    const Json& a = field(j, "assign");
    std::vector<IdSimplex> ids(X.size());
    std::vector<char> seen(X.size(), 0);
    for (const auto& [k, v] : a.items()) {
        const int c = X.index(k);
        seen[c] = 1;
        ids[c] = id_simplex(v);
    }
    for (int c = 0; c < X.size(); ++c)
        if (!seen[c]) throw Error(ErrorKind::map, "no image for '" + X.id(c) + "'");
    std::vector<int> dims(X.size());
    for (int c = 0; c < X.size(); ++c) dims[c] = X.dim(c);
    return from_ids(Y, ids, dims);
}

Json pairing_to_json(const SSet& B, const Pairing& p) {
    Json j;
    j["base"] = mask_ids(B, p.base);
    j["typeII"] = Json::array();
    j["T"] = Json::object();
    j["k"] = Json::object();
    for (int c = 0; c < B.size(); ++c)
        if (p.type2(c)) {
            j["typeII"].push_back(B.id(c));
            j["T"][B.id(c)] = B.id(p.T[c]);
            j["k"][B.id(c)] = p.k[c];
        }
    return j;
}

Pairing pairing_from_json(const Json& j, const SSet& B) {
    Pairing p(B.size());
    for (const auto& s : field(j, "typeII")) {
        const std::string id = get<std::string>(s, "typeII entry");
        const int c = B.index(id);
        p.pair(c, B.index(get<std::string>(field(field(j, "T"), id.c_str()), "T entry")),
               get<int>(field(field(j, "k"), id.c_str()), "k entry"));
    }
    if (j.contains("base")) {
        p.base = id_mask(j["base"], B, "base entry");
    } else {
        // base = everything not paired
        std::vector<char> paired(B.size(), 0);
        for (int c = 0; c < B.size(); ++c)
            if (p.type2(c)) paired[c] = paired[p.T[c]] = 1;
        for (int c = 0; c < B.size(); ++c) p.base[c] = !paired[c];
    }
    return p;
}

Json presentation_to_json(const SSet& B, const Presentation& a) {
    Json j;
    j["base"] = mask_ids(B, a.base);
    j["steps"] = Json::array();
    for (const auto& [top, k] : a.steps) j["steps"].push_back(Json::array({B.id(top), k}));
    return j;
}

Presentation presentation_from_json(const Json& j, const SSet& B) {
    Presentation a;
    a.base = id_mask(field(j, "base"), B, "base entry");
    for (const auto& s : field(j, "steps")) {
        if (!s.is_array() || s.size() != 2) bad("steps must be [cellid, k]");
        a.steps.emplace_back(B.index(get<std::string>(s[0], "step cell")), get<int>(s[1], "step index"));
    }
    return a;
}

Json to_json(const MoveRecord& m, const Poset& P) {
    Json j;
    if (m.kind == MoveRecord::Kind::collapse) {
        j["kind"] = "collapse";
        j["top"] = m.top;
        j["k"] = m.k;
        return j;
    }
    j["kind"] = "expand";
    j["dflag"] = Json::array();
    for (int p : m.dflag) j["dflag"].push_back(element(P, p));
    j["k"] = m.k;
    SSet H = horn(P, HornSpec{m.dflag, m.k});
    Json a = Json::object();
    for (int c = 0; c < H.size(); ++c) a[H.id(c)] = word_pair(m.attach[c].word, m.attach[c].cell);
    j["attach"] = Json{{"assign", std::move(a)}};
    j["top"] = m.top;
    j["face"] = m.face;
    return j;
}

MoveRecord move_from_json(const Json& j, const Poset& P) {
    MoveRecord m;
    const std::string kind = get<std::string>(field(j, "kind"), "kind");
    m.k = get<int>(field(j, "k"), "k");
    if (kind == "collapse") {
        m.kind = MoveRecord::Kind::collapse;
        m.top = get<std::string>(field(j, "top"), "top");
        return m;
    }
    if (kind != "expand") bad("unknown move kind '" + kind + "'");
    m.kind = MoveRecord::Kind::expand;
    for (const auto& e : field(j, "dflag")) m.dflag.push_back(element(P, e));
    if (!is_dflag(P, m.dflag)) throw Error(ErrorKind::poset, "expansion flag is not a d-flag");
    if (m.dflag.size() < 2 || m.k < 0 || m.k >= static_cast<int>(m.dflag.size())) bad("horn index out of range");
    SSet H = horn(P, HornSpec{m.dflag, m.k});
    const Json& a = field(field(j, "attach"), "assign");
    m.attach.resize(H.size());
    for (int c = 0; c < H.size(); ++c) m.attach[c] = id_simplex(field(a, H.id(c).c_str()));
    if (static_cast<int>(a.size()) != H.size()) bad("attaching map names cells outside the horn");
    if (j.contains("top")) m.top = j["top"];
    if (j.contains("face")) m.face = j["face"];
    return m;
}

Json to_json(const Deformation& d) {
    Json j;
    if (d.from) j["from"] = to_json(*d.from);
    if (d.to) j["to"] = to_json(*d.to);
    j["legs"] = Json::array();
    for (const Leg& leg : d.legs) {
        Json l;
        l["direction"] = dir_name(leg.dir);
        if (leg.kind == Leg::Kind::moves) {
            const Poset& P = d.from ? d.from->poset() : d.to ? d.to->poset() : leg.B.poset();
            l["moves"] = Json::array();
            for (const auto& m : leg.moves) l["moves"].push_back(to_json(m, P));
        } else {
            l["presentation"] = presentation_to_json(leg.B, leg.pres);
            l["B"] = to_json(leg.B);
            if (!leg.incl.empty()) {
                l["inclusion"] = Json::object();
                for (const auto& [a, b] : leg.incl) l["inclusion"][a] = b;
            }
        }
        j["legs"].push_back(std::move(l));
    }
    return j;
}

Deformation deformation_from_json(const Json& j) {
    Deformation d;
    if (j.contains("from")) d.from = sset_from_json(j["from"]);
    if (j.contains("to")) d.to = sset_from_json(j["to"]);
    for (const auto& l : field(j, "legs")) {
        Leg leg;
        const std::string dir = get<std::string>(field(l, "direction"), "direction");
        if (dir != "forward" && dir != "backward") bad("direction must be forward or backward");
        leg.dir = dir == "forward" ? Leg::Dir::forward : Leg::Dir::backward;
        if (l.contains("moves")) {
            leg.kind = Leg::Kind::moves;
            std::optional<Poset> P;
            if (d.from) P = d.from->poset();
            else if (d.to) P = d.to->poset();
            for (const auto& m : l["moves"]) {
                if (!P) bad("a moves leg needs an endpoint to fix the poset");
                leg.moves.push_back(move_from_json(m, *P));
            }
        } else {
            leg.kind = Leg::Kind::presentation;
            leg.B = sset_from_json(field(l, "B"));
            leg.pres = presentation_from_json(field(l, "presentation"), leg.B);
            if (l.contains("inclusion"))
                for (const auto& [a, b] : l["inclusion"].items()) leg.incl.emplace(a, get<std::string>(b, "inclusion"));
        }
        d.legs.push_back(std::move(leg));
    }
    return d;
}

Json to_json(const std::vector<Diagnostic>& diags) {
    Json a = Json::array();
    for (const auto& d : diags) a.push_back(Json{{"code", d.code}, {"cells", d.cells}, {"message", d.message}});
    return a;
}

Json to_json(const ReduceReport& r) {
    return Json{{"before", r.before}, {"after", r.after}, {"moves", r.moves}, {"strict_moves", r.strict_moves},
                {"wall_ms", r.wall_ms}};
}

Json read_json(const std::string& path) {
    try {
        if (path == "-") return Json::parse(std::cin);
        std::ifstream in(path);
        if (!in) bad("cannot open " + path);
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        bad((path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json(const Json& j, const std::string& path) {
    if (path == "-") {
        std::cout << dump(j);
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::parse, "cannot write " + path);
    out << dump(j);
}

}  // namespace strathom
