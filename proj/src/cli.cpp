#include "sympair/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "sympair/cone.hpp"
#include "sympair/numerics.hpp"

namespace sympair {

namespace {

struct Options {
    int p = 0, q = 0, n = 0;
    std::string partition, diagram, format = "text", output;
    int samples = 100;
    double tol = 1e-9;
    uint64_t seed = 12345;
    bool ambient = false;
};

void add_signature_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--p", opt.p, "dimension of the + eigenspace")->required();
    cmd->add_option("--q", opt.q, "dimension of the - eigenspace")->required();
}

void add_format_flag(CLI::App* cmd, Options& opt, std::vector<std::string> allowed) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember(allowed))
        ->capture_default_str();
    cmd->add_option("--output", opt.output, "write output to a file instead of stdout");
}

void deliver(const Options& opt, const std::string& text, std::ostream& out) {
    if (opt.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(opt.output);
    if (!file) throw std::runtime_error("cannot open output file " + opt.output);
    file << text;
}

std::string diagram_list(const std::vector<SignedDiagram>& ds, const std::string& indent) {
    std::string out;
    for (const auto& d : ds) out += indent + d.str() + "\n";
    return out;
}

std::string cone_text(const ConeResult& r) {
    std::ostringstream out;
    Signature sig = r.input.signature();
    out << "input: " << r.input.str() << "\n";
    out << "signature: (" << sig.p << "," << sig.q << ")\n";
    out << "partition: " << r.input.underlying().str() << "\n";
    out << "components (" << r.components.size() << "):\n"
        << diagram_list(r.components, "  ");
    out << "cone orbits (" << r.cone_poset.nodes.size() << "):\n"
        << diagram_list(r.cone_poset.nodes, "  ");
    out << "ambient orbits (" << r.ambient_poset.nodes.size() << "):\n"
        << diagram_list(r.ambient_poset.nodes, "  ");
    out << "strict gap (" << r.strict_gap.size() << "):\n"
        << diagram_list(r.strict_gap, "  ");
    return out.str();
}

std::string hasse_text(const HasseDiagram& h) {
    std::ostringstream out;
    out << "orbits (" << h.nodes.size() << "):\n" << diagram_list(h.nodes, "  ");
    out << "covers (" << h.covers.size() << "):\n";
    for (const auto& [big, small] : h.covers)
        out << "  " << h.nodes[static_cast<size_t>(big)].str() << " > "
            << h.nodes[static_cast<size_t>(small)].str() << "\n";
    return out.str();
}

std::string triple_text(const KSTriple& t, const CayleyData& c) {
    std::ostringstream out;
    out << "diagram: " << t.diagram.str() << "\n";
    out << "x =\n" << t.x.grid_str();
    out << "h =\n" << t.h.grid_str();
    out << "y =\n" << t.y.grid_str();
    out << "e =\n" << c.e.grid_str();
    out << "f =\n" << c.f.grid_str();
    out << "a =\n" << c.a.grid_str();
    return out.str();
}

int guarded(std::ostream& err, const std::function<void()>& body) {
    try {
        body();
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact orbit computations for the symmetric pairs (GL_{p+q}, GL_p x GL_q)"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* orbits = app.add_subcommand(
        "orbits", "list the nilpotent K-orbits in s with a given Jordan type");
    add_signature_flags(orbits, opt);
    orbits->add_option("--partition", opt.partition, "Jordan type, e.g. \"[2,2]\"")->required();
    add_format_flag(orbits, opt, {"text", "json"});

    CLI::App* cone = app.add_subcommand(
        "cone", "asymptotic cone of the semisimple orbit K.a attached to an even diagram");
    add_signature_flags(cone, opt);
    cone->add_option("--diagram", opt.diagram, "signed diagram, e.g. \"[(+-)^2]\"")->required();
    add_format_flag(cone, opt, {"text", "json", "dot"});

    CLI::App* hassecmd = app.add_subcommand(
        "hasse", "closure-order Hasse diagram of the orbits below a Jordan type");
    add_signature_flags(hassecmd, opt);
    hassecmd->add_option("--partition", opt.partition, "Jordan type")->required();
    hassecmd->add_flag("--ambient", opt.ambient,
                       "use all orbits of dominated types (closure(G.x) in s) instead of the "
                       "orbits below the type's own diagrams");
    add_format_flag(hassecmd, opt, {"text", "json", "dot"});

    CLI::App* triple = app.add_subcommand("triple", "KS triple and Cayley data of a diagram");
    add_signature_flags(triple, opt);
    triple->add_option("--diagram", opt.diagram, "signed diagram")->required();
    add_format_flag(triple, opt, {"text", "json"});

    CLI::App* verify = app.add_subcommand(
        "verify", "numerical check of limit curves and cone membership");
    add_signature_flags(verify, opt);
    verify->add_option("--diagram", opt.diagram, "signed diagram (even type)")->required();
    verify->add_option("--samples", opt.samples, "Monte Carlo samples")->capture_default_str();
    verify->add_option("--tol", opt.tol, "relative rank tolerance")->capture_default_str();
    verify->add_option("--seed", opt.seed, "random seed")->capture_default_str();
    add_format_flag(verify, opt, {"text", "json"});

    CLI::App* dim = app.add_subcommand("dim", "dimension of the nilpotent K-orbit of a diagram");
    add_signature_flags(dim, opt);
    dim->add_option("--diagram", opt.diagram, "signed diagram")->required();
    add_format_flag(dim, opt, {"text", "json"});

    CLI::App* siegel = app.add_subcommand(
        "siegel", "the U(n,n) family: cone of [(+-)^n] and the K_{p,q} poset");
    siegel->add_option("--n", opt.n, "half-size n of the pair (GL_2n, GL_n x GL_n)")->required();
    add_format_flag(siegel, opt, {"text", "json", "dot"});

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    if (orbits->parsed())
        return guarded(err, [&] {
            Signature sig(opt.p, opt.q);
            auto ds = enumerate_orbits(Partition::parse(opt.partition), sig);
            if (opt.format == "json") {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& d : ds) arr.push_back(d.to_json());
                deliver(opt, arr.dump(2) + "\n", out);
            } else {
                deliver(opt, diagram_list(ds, ""), out);
            }
        });

    if (cone->parsed())
        return guarded(err, [&] {
            Signature sig(opt.p, opt.q);
            ConeResult r = asymptotic_cone(SignedDiagram::parse(opt.diagram, sig));
            if (opt.format == "json")
                deliver(opt, r.to_json().dump(2) + "\n", out);
            else if (opt.format == "dot")
                deliver(opt, emit_dot(r.cone_poset), out);
            else
                deliver(opt, cone_text(r), out);
        });

    if (hassecmd->parsed())
        return guarded(err, [&] {
            Signature sig(opt.p, opt.q);
            Partition lambda = Partition::parse(opt.partition);
            std::vector<SignedDiagram> nodes;
            std::vector<RankProfile> tops;
            for (const auto& t : enumerate_orbits(lambda, sig)) tops.push_back(rank_profile(t));
            for (const Partition& mu : partitions_of(lambda.size())) {
                if (!dominance_le(mu, lambda)) continue;
                for (SignedDiagram& d : enumerate_orbits(mu, sig)) {
                    if (!opt.ambient) {
                        RankProfile profile = rank_profile(d);
                        bool below = false;
                        for (const auto& t : tops)
                            if (profile_leq(profile, t)) {
                                below = true;
                                break;
                            }
                        if (!below) continue;
                    }
                    nodes.push_back(std::move(d));
                }
            }
            HasseDiagram h = hasse(std::move(nodes));
            if (opt.format == "json")
                deliver(opt, h.to_json().dump(2) + "\n", out);
            else if (opt.format == "dot")
                deliver(opt, emit_dot(h), out);
            else
                deliver(opt, hasse_text(h), out);
        });

    if (triple->parsed())
        return guarded(err, [&] {
            Signature sig(opt.p, opt.q);
            KSTriple t = build_ks_triple(SignedDiagram::parse(opt.diagram, sig));
            CayleyData c = cayley(t);
            if (opt.format == "json") {
                nlohmann::json j = t.to_json();
                j.update(c.to_json());
                deliver(opt, j.dump(2) + "\n", out);
            } else {
                deliver(opt, triple_text(t, c), out);
            }
        });

    if (verify->parsed())
        return guarded(err, [&] {
            Signature sig(opt.p, opt.q);
            SignedDiagram d = SignedDiagram::parse(opt.diagram, sig);
            VerificationReport r = sample_orbit_limits(d, opt.samples, opt.tol, opt.seed);
            if (opt.format == "json")
                deliver(opt, r.to_json().dump(2) + "\n", out);
            else
                deliver(opt, "diagram: " + d.str() + "\n" + r.summary(), out);
        });

    if (dim->parsed())
        return guarded(err, [&] {
            Signature sig(opt.p, opt.q);
            SignedDiagram d = SignedDiagram::parse(opt.diagram, sig);
            long value = dim_k_orbit(d);
            if (opt.format == "json") {
                nlohmann::json j = {{"diagram", d.to_json()}, {"dim", value}};
                deliver(opt, j.dump(2) + "\n", out);
            } else {
                deliver(opt, std::to_string(value) + "\n", out);
            }
        });

    if (siegel->parsed())
        return guarded(err, [&] {
            SiegelFamily f = siegel_family(opt.n);
            if (opt.format == "json") {
                nlohmann::json j = {{"cone", f.cone.to_json()},
                                    {"extended_poset", f.extended_poset.to_json()}};
                deliver(opt, j.dump(2) + "\n", out);
            } else if (opt.format == "dot") {
                deliver(opt, emit_dot(f.extended_poset), out);
            } else {
                std::ostringstream text;
                text << cone_text(f.cone) << "extended poset:\n"
                     << hasse_text(f.extended_poset);
                deliver(opt, text.str(), out);
            }
        });

    return 2;
}

}  // namespace sympair
