#include "strathom/cylinders.hpp"
#include "strathom/fos.hpp"
#include "strathom/homology.hpp"
#include "strathom/io.hpp"
#include "strathom/reduce.hpp"
#include "strathom/subdivision.hpp"
#include "strathom/tda.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace strathom;

namespace {

constexpr int kOk = 0, kFailed = 1, kInput = 2;

struct Common {
    bool json = false;
    int threads = 1;
};

SSet load(const std::string& path) { return sset_from_json(read_json(path)); }

std::vector<std::string> split_ids(const std::vector<std::string>& raw) {
    std::vector<std::string> out;
    for (const auto& r : raw) {
        std::stringstream ss(r);
        std::string id;
        while (std::getline(ss, id, ','))
            if (!id.empty()) out.push_back(id);
    }
    return out;
}

// With --json the summary goes to stdout, so a complex bound for "-" is embedded in it instead.
void emit(const Common& c, Json summary, const Json* result, const std::string& out) {
    if (result && !(c.json && out == "-")) write_json(*result, out);
    else if (result) summary["result"] = *result;
    if (c.json) std::cout << dump(summary);
}

void say(const Common& c, const std::string& line) {
    if (!c.json) std::cerr << line << "\n";
}

Json counts_json(const SSet& X) {
    // dimension -> per-stratum counts, strata in poset order
    Json by = Json::object();
    auto t = counts_by_stratum(X);
    for (size_t n = 0; n < t.size(); ++n) by[std::to_string(n)] = t[n];
    return by;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stratified simple homotopy toolkit for finite filtered simplicial sets"};
    app.require_subcommand(1);
    app.fallthrough();
    Common c;
    app.add_flag("--json", c.json, "Machine-readable summary on stdout");
    if (const char* t = std::getenv("STRATHOM_THREADS")) c.threads = std::max(1, std::atoi(t));
    app.add_option("--threads", c.threads, "Worker threads (default $STRATHOM_THREADS or 1)")->check(CLI::PositiveNumber);

    std::string in, in2, in3, out = "-", cert_path, report_path, sd_kind = "sd", cyl_kind = "tgt_into_cyl";
    std::vector<std::string> ids, downset;
    int iterations = 1;
    double eps = 0;
    int max_dim = 2;
    long max_rounds = -1;
    bool strict_only = false, ascending = false, strata = false;
    std::string from_path, to_path;

    auto* validate_cmd = app.add_subcommand("validate", "Check a .fss.json file");
    validate_cmd->add_option("input", in, "Input (- for stdin)")->required();

    auto* info_cmd = app.add_subcommand("info", "Cell counts, strata, FOS status");
    info_cmd->add_option("input", in, "Input (- for stdin)")->required();

    auto* vr_cmd = app.add_subcommand("vr", "Filtered Vietoris-Rips complex of a labelled point cloud");
    vr_cmd->add_option("points", in, "CSV with a final label column (- for stdin)")->required();
    vr_cmd->add_option("--eps", eps, "Scale; pairs at distance <= eps are joined")->required();
    vr_cmd->add_option("--max-dim", max_dim, "Largest simplex dimension")->check(CLI::NonNegativeNumber);
    vr_cmd->add_option("--out", out, "Output (- for stdout)");

    auto* reduce_cmd = app.add_subcommand("reduce", "Greedy admissible collapse with a certificate");
    reduce_cmd->add_option("input", in, "Input (- for stdin)")->required();
    reduce_cmd->add_flag("--strict-only", strict_only, "Only strictly admissible collapses");
    reduce_cmd->add_flag("--ascending", ascending, "Scan low dimensions first");
    reduce_cmd->add_option("--max-rounds", max_rounds, "Stop after this many collapses")->check(CLI::NonNegativeNumber);
    reduce_cmd->add_option("--protect", ids, "Cell ids that must survive (comma separated)");
    reduce_cmd->add_option("--cert", cert_path, "Write the deformation certificate here");
    reduce_cmd->add_option("--report", report_path, "Write the report here");
    reduce_cmd->add_option("--out", out, "Reduced complex (- for stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "Replay a deformation certificate");
    verify_cmd->add_option("cert", in, "Certificate (- for stdin)")->required();
    verify_cmd->add_option("--from", from_path, "Replace the start object");
    verify_cmd->add_option("--to", to_path, "Replace the end object");

    auto* sd_cmd = app.add_subcommand("subdivide", "Barycentric (sd), stratum-thickening (sdp) or relative (rel) subdivision");
    sd_cmd->add_option("input", in, "Input (- for stdin)")->required();
    sd_cmd->add_option("--kind", sd_kind, "sd, sdp or rel")->check(CLI::IsMember({"sd", "sdp", "rel"}));
    sd_cmd->add_option("--iterations", iterations, "Number of subdivisions")->check(CLI::PositiveNumber);
    sd_cmd->add_option("--downset", downset,
                       "rel only: strata (comma separated) whose downset spans the fixed subcomplex A")
        ->delimiter(',');
    sd_cmd->add_option("--lv", cert_path, "Write the composite last vertex map (l1 for rel) here");
    sd_cmd->add_option("--out", out, "Output (- for stdout)");

    auto* fos_cmd = app.add_subcommand("fos-convert", "Subdivide to an FOS complex with a certificate");
    fos_cmd->add_option("input", in, "Input (- for stdin)")->required();
    fos_cmd->add_option("--emit-cert", cert_path, "Write the deformation certificate here");
    fos_cmd->add_option("--out", out, "Output (- for stdout)");

    auto* hom_cmd = app.add_subcommand("homology", "Z/2 Betti numbers and Euler characteristic");
    hom_cmd->add_option("input", in, "Input (- for stdin)")->required();
    hom_cmd->add_flag("--strata", strata, "Per-stratum tables as well");

    auto* pair_cmd = app.add_subcommand("pair-check", "Check a pairing or presentation on B");
    pair_cmd->add_option("B", in, "The target complex")->required();
    pair_cmd->add_option("cert", in2, "Pairing {typeII,T,k} or presentation {base,steps}")->required();

    auto* cyl_cmd = app.add_subcommand("cylinder", "Cylinder constructions with pairing certificates");
    cyl_cmd->add_option("X", in, "Source complex")->required();
    cyl_cmd->add_option("Y", in2, "Target complex (needed except for i0/i1)");
    cyl_cmd->add_option("--map", in3, "Map X -> Y as {\"assign\":...}");
    cyl_cmd->add_option("--kind", cyl_kind, "i0, i1, tgt_into_cyl, rel_horn_quotient or subcyl")
        ->check(CLI::IsMember({"i0", "i1", "tgt_into_cyl", "rel_horn_quotient", "subcyl"}));
    cyl_cmd->add_option("--sub", ids, "subcyl: cell ids of the subset (comma separated)");
    cyl_cmd->add_option("--pairing", from_path, "rel_horn_quotient: pairing on X");
    cyl_cmd->add_option("--cert", cert_path, "Write the pairing here");
    cyl_cmd->add_option("--out", out, "Cylinder (- for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        if (app.get_subcommands().empty()) std::cerr << app.help();
        return kInput;
    }
    try {
        if (*validate_cmd) {
            auto diags = validate(load(in));
            if (c.json) std::cout << dump(Json{{"ok", diags.empty()}, {"diagnostics", to_json(diags)}});
            for (const auto& d : diags) say(c, d.code + ": " + d.message);
            return diags.empty() ? kOk : kFailed;
        }
        if (*info_cmd) {
            SSet X = load(in);
            Json s{{"cells", X.size()},         {"dim", X.dim()},
                   {"by_dim", X.count_by_dim()}, {"by_dim_and_stratum", counts_json(X)},
                   {"euler", euler(X)},          {"fos", is_fos(X)},
                   {"nonsingular", is_nonsingular(X)}};
            if (c.json) std::cout << dump(s);
            else std::cout << s.dump() << "\n";
            return kOk;
        }
        if (*vr_cmd) {
            LabeledPointCloud cloud = in == "-" ? parse_points(std::cin) : load_points(in);
            SSet K = vietoris_rips(cloud, eps, max_dim, c.threads);
            Json r = to_json(K);
            emit(c, Json{{"cells", K.size()}, {"by_dim", K.count_by_dim()}}, &r, out);
            return kOk;
        }
        if (*reduce_cmd) {
            SSet X = load(in);
            ReduceStrategy s;
            s.strict_only = strict_only;
            s.descending = !ascending;
            s.max_rounds = max_rounds;
            s.protect = split_ids(ids);
            for (const auto& id : s.protect) X.index(id);
            auto r = reduce(X, s);
            if (!cert_path.empty()) write_json(to_json(r.cert), cert_path);
            Json report = to_json(r.report);
            if (!report_path.empty()) write_json(report, report_path);
            Json k = to_json(r.X);
            emit(c, report, &k, out);
            say(c, "reduce: " + std::to_string(r.report.moves) + " collapses (" + std::to_string(r.report.strict_moves) +
                       " strict), " + std::to_string(X.size()) + " -> " + std::to_string(r.X.size()) + " cells");
            return kOk;
        }
        if (*verify_cmd) {
            Deformation d = deformation_from_json(read_json(in));
            if (!from_path.empty()) d.from = load(from_path);
            if (!to_path.empty()) d.to = load(to_path);
            std::vector<std::vector<char>> strict;
            auto diags = verify(d, &strict);
            Json st = Json::array();
            for (const auto& leg : strict) {
                Json l = Json::array();
                for (char x : leg) l.push_back(x != 0);
                st.push_back(l);
            }
            if (c.json) std::cout << dump(Json{{"ok", diags.empty()}, {"strict", st}, {"diagnostics", to_json(diags)}});
            for (const auto& dg : diags) say(c, dg.code + ": " + dg.message);
            if (diags.empty()) say(c, "verified: " + std::to_string(d.legs.size()) + " legs");
            return diags.empty() ? kOk : kFailed;
        }
        if (*sd_cmd) {
            SSet X = load(in);
            SSet S;
            SMap back;  // S -> X
            if (sd_kind == "rel") {
                if (downset.empty()) throw Error(ErrorKind::parameter, "--kind rel needs --downset");
                const Poset& P = X.poset();
                std::vector<char> low(P.size(), 0);
                for (const auto& name : downset)
                    for (int q = 0; q < P.size(); ++q)
                        if (P.leq(q, P.id(name))) low[q] = 1;
                std::vector<char> A(X.size(), 0);
                for (int x = 0; x < X.size(); ++x) {
                    A[x] = 1;
                    for (int v : X.vertices(x)) A[x] = A[x] && low[X.label(v)];
                }
                FamilySubdivision f = sd_family(X, std::vector<std::vector<char>>(iterations, A));
                S = std::move(f.S);
                back = std::move(f.l1);
            } else {
                if (!downset.empty()) throw Error(ErrorKind::parameter, "--downset only applies to --kind rel");
                S = X;
                back = identity_map(X);
                for (int i = 0; i < iterations; ++i) {
                    Subdivision s = sd_kind == "sd" ? sd(S) : sd_p(S);
                    back = compose(sd_kind == "sd" ? lv(S, s) : lv_p(S, s), back);
                    S = std::move(s.S);
                }
            }
            if (!cert_path.empty()) write_json(map_to_json(S, X, back), cert_path);
            Json r = to_json(S);
            emit(c, Json{{"cells", S.size()}, {"by_dim", S.count_by_dim()}}, &r, out);
            return kOk;
        }
        if (*fos_cmd) {
            SSet X = load(in);
            FosResult r = to_fos(X);
            if (!cert_path.empty()) write_json(to_json(r.cert), cert_path);
            Json k = to_json(r.K);
            emit(c, Json{{"subdivisions", r.subdivisions}, {"cells", r.K.size()}, {"by_dim", r.K.count_by_dim()}}, &k, out);
            return kOk;
        }
        if (*hom_cmd) {
            SSet X = load(in);
            Json s{{"betti", betti_z2(X)}, {"euler", euler(X)}};
            if (strata) {
                auto sb = strata_betti(X);
                auto se = strata_euler(X);
                Json rows = Json::array();
                for (int p = 0; p < X.poset().size(); ++p)
                    rows.push_back(Json{{"stratum", X.poset().name(p)},
                                        {"relative", sb.relative[p]},
                                        {"absolute", sb.absolute[p]},
                                        {"euler", se[p]}});
                s["strata"] = rows;
                if (sb.relative != sb.absolute) s["note"] = "relative and absolute stratum homology differ";
            }
            std::cout << (c.json ? dump(s) : s.dump() + "\n");
            return kOk;
        }
        if (*pair_cmd) {
            SSet B = load(in);
            Json j = read_json(in2);
            std::vector<Diagnostic> diags;
            if (j.contains("steps")) {
                diags = replay(B, presentation_from_json(j, B));
            } else {
                Pairing p = pairing_from_json(j, B);
                std::string why;
                if (!certificate_ok(B, p, &why)) diags.push_back({"pairing", {}, why});
            }
            if (c.json) std::cout << dump(Json{{"ok", diags.empty()}, {"diagnostics", to_json(diags)}});
            for (const auto& d : diags) say(c, d.code + ": " + d.message);
            return diags.empty() ? kOk : kFailed;
        }
        if (*cyl_cmd) {
            CylinderData data;
            data.X = load(in);
            const CylFsae k = *cyl_fsae_from_string(cyl_kind);
            if (k != CylFsae::i0 && k != CylFsae::i1) {
                if (in2.empty() || in3.empty()) throw Error(ErrorKind::parameter, cyl_kind + " needs Y and --map");
                data.Y = load(in2);
                data.f = map_from_json(read_json(in3), data.X, data.Y);
            }
            if (k == CylFsae::subcyl) {
                data.sub.assign(data.X.size(), 0);
                for (const auto& id : split_ids(ids)) data.sub[data.X.index(id)] = 1;
            }
            if (k == CylFsae::rel_horn_quotient) {
                if (from_path.empty()) throw Error(ErrorKind::parameter, "rel_horn_quotient needs --pairing");
                data.pairing = pairing_from_json(read_json(from_path), data.X);
            }
            Certified r = cylinder_fsae(k, data);
            if (!cert_path.empty()) write_json(pairing_to_json(r.B, r.pairing), cert_path);
            Json m = to_json(r.B);
            emit(c, Json{{"cells", r.B.size()}, {"paired", r.pairing.count()}}, &m, out);
            return kOk;
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kInput;
    }
    return kInput;
}
