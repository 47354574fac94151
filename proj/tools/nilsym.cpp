#include <chrono>
#include <cstdint>
#include <iomanip>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "nilsym/catalog.hpp"
#include "nilsym/deform.hpp"
#include "nilsym/exterior.hpp"
#include "nilsym/io.hpp"
#include "nilsym/lie_algebra.hpp"
#include "nilsym/symplectic.hpp"
#include "nilsym/version.hpp"

using json = nlohmann::json;
using namespace nilsym;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalidAlgebra = 2;

std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

unsigned default_seed() {
    if (const char* env = std::getenv("NILSYM_SEED")) {
        try {
            return static_cast<unsigned>(std::stoul(env));
        } catch (...) {
            throw std::runtime_error("NILSYM_SEED must be a nonnegative integer");
        }
    }
    return 0;
}

json base_report(const std::string& command, const std::string& input) {
    json r;
    r["tool_version"] = kVersion;
    r["input_digest"] = hex64(fnv1a(input));
    r["command"] = command;
    return r;
}

json witness_json(const PForm& theta) {
    json w = json::array();
    for (const auto& [idx, c] : theta.coeffs()) w.push_back({idx[0], idx[1], rat_str(c)});
    return w;
}

PForm form_from_entries(int dim, const std::string& spec) {
    PForm f(dim, 2);
    for (const auto& [i, j, c] : parse_form_entries(spec)) {
        if (!(1 <= i && i < j && j <= dim)) throw std::runtime_error("form index out of range");
        f.add({i, j}, c);
    }
    return f;
}

// "k:c,k:c" syntax for 1-forms passed to cartan-class.
PForm one_form_from_spec(int dim, const std::string& spec) {
    PForm f(dim, 1);
    std::istringstream in(spec);
    std::string piece;
    while (std::getline(in, piece, ',')) {
        auto colon = piece.find(':');
        if (colon == std::string::npos) throw std::runtime_error("expected k:c entries");
        int k = std::stoi(piece.substr(0, colon));
        auto c = parse_rational(piece.substr(colon + 1));
        if (!c || !(1 <= k && k <= dim)) throw std::runtime_error("malformed 1-form entry");
        f.add({k}, *c);
    }
    return f;
}

LieAlgebra load_algebra(const std::string& path, std::string* raw = nullptr) {
    std::string text = slurp(path);
    if (raw) *raw = text;
    return parse_algebra(text);
}

struct InvalidAlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_valid(const LieAlgebra& l) {
    auto rep = l.validate();
    if (rep.ok) return;
    std::ostringstream os;
    os << "Jacobi identity fails on triples:";
    for (const auto& v : rep.violations) os << " (" << v.i << "," << v.j << "," << v.l << ")";
    throw InvalidAlgebraError(os.str());
}

void emit(const json& r, bool as_json, const std::string& human) {
    if (as_json)
        std::cout << r.dump(2) << "\n";
    else
        std::cout << human;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nilsym: exact symplectic analysis of nilpotent Lie algebras"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit a machine-readable JSON report");

    std::string file, form_spec, weights_spec, cocycle_path, deriv_path, t_spec, cat_name;
    unsigned seed = default_seed();
    int trials = 32;

    auto* check = app.add_subcommand("check", "parse and validate an algebra file");
    check->add_option("file", file)->required();

    auto* info = app.add_subcommand("info", "series dimensions, characteristic sequence");
    info->add_option("file", file)->required();
    info->add_option("--seed", seed);
    info->add_option("--trials", trials);

    auto* symp = app.add_subcommand("symplectic", "decide symplectic existence");
    symp->add_option("file", file)->required();
    symp->add_option("--seed", seed);

    auto* cclass = app.add_subcommand("cartan-class", "Cartan class of a 1-form");
    cclass->add_option("file", file)->required();
    cclass->add_option("--form", form_spec, "1-form as k:c,k:c")->required();

    auto* coh = app.add_subcommand("cohomology", "Betti numbers of the algebra");
    coh->add_option("file", file)->required();

    auto* contr = app.add_subcommand("contract", "diagonal weight contraction");
    contr->add_option("file", file)->required();
    contr->add_option("--weights", weights_spec, "comma-separated integers")->required();
    contr->add_option("--form", form_spec, "2-form as i,j:c;...");

    auto* def = app.add_subcommand("deform", "linear deformation by a 2-cochain");
    def->add_option("file", file)->required();
    def->add_option("--cocycle", cocycle_path)->required();
    def->add_option("--t", t_spec)->required();

    auto* dext = app.add_subcommand("double-extend", "symplectic double extension");
    dext->add_option("file", file)->required();
    dext->add_option("--form", form_spec, "2-form as i,j:c;...")->required();
    dext->add_option("--derivation", deriv_path)->required();

    auto* cat = app.add_subcommand("catalog", "named algebra roster");
    auto* cat_list = cat->add_subcommand("list", "list catalog names");
    auto* cat_show = cat->add_subcommand("show", "show a catalog entry");
    cat_show->add_option("name", cat_name)->required();
    auto* cat_emit = cat->add_subcommand("emit", "serialize a catalog entry");
    cat_emit->add_option("name", cat_name)->required();
    cat->require_subcommand(1);

    for (auto* sub : {check, info, symp, cclass, coh, contr, def, dext, cat_list, cat_show})
        sub->add_flag("--json", as_json, "emit a machine-readable JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*check) {
            std::string raw;
            LieAlgebra l = load_algebra(file, &raw);
            require_valid(l);
            json r = base_report("check", raw);
            r["valid"] = true;
            r["dim"] = l.dim();
            std::ostringstream os;
            os << "valid " << l.dim() << "-dimensional Lie algebra";
            if (!l.name().empty()) os << " '" << l.name() << "'";
            os << "\n";
            emit(r, as_json, os.str());
            return kExitOk;
        }
        if (*info) {
            std::string raw;
            LieAlgebra l = load_algebra(file, &raw);
            require_valid(l);
            json r = base_report("info", raw);
            auto lower = l.lower_central_series();
            auto upper = l.upper_central_series();
            json lo = json::array(), up = json::array();
            for (const auto& s : lower) lo.push_back(s.dim());
            for (const auto& s : upper) up.push_back(s.dim());
            CharSeq cs = l.characteristic_sequence(seed, trials);
            r["dim"] = l.dim();
            r["lower_central_series"] = lo;
            r["upper_central_series"] = up;
            r["characteristic_sequence"] = cs.seq;
            r["generators"] = l.generators_count();
            r["center_dim"] = upper.size() > 1 ? upper[1].dim() : 0;
            auto ni = l.nilindex();
            if (ni)
                r["nilindex"] = *ni;
            else
                r["nilindex"] = nullptr;
            std::ostringstream os;
            os << "dim " << l.dim() << "\nlower central series dims:";
            for (const auto& s : lower) os << " " << s.dim();
            os << "\nupper central series dims:";
            for (const auto& s : upper) os << " " << s.dim();
            os << "\ncharacteristic sequence: " << cs.str();
            os << "\ngenerators: " << l.generators_count() << "\n";
            if (ni)
                os << "nilpotent, nilindex " << *ni << "\n";
            else
                os << "not nilpotent\n";
            emit(r, as_json, os.str());
            return kExitOk;
        }
        if (*symp) {
            std::string raw;
            LieAlgebra l = load_algebra(file, &raw);
            require_valid(l);
            auto t0 = std::chrono::steady_clock::now();
            SymplecticCertificate cert = decide_symplectic(l, seed);
            auto t1 = std::chrono::steady_clock::now();
            json r = base_report("symplectic", raw);
            r["decision"] = cert.symplectic ? "symplectic" : "not_symplectic";
            r["closed_space_dim"] = cert.closed_space_dim;
            switch (cert.proof) {
                case SymplecticProof::WitnessVerified: r["certificate"] = "witness-verified"; break;
                case SymplecticProof::PfaffianIdenticallyZero:
                    r["certificate"] = "pfaffian-identically-zero";
                    break;
                case SymplecticProof::OddDimension: r["certificate"] = "odd-dimension"; break;
            }
            if (cert.witness) r["witness"] = witness_json(*cert.witness);
            r["timings"] = {{"decide_ms",
                             std::chrono::duration<double, std::milli>(t1 - t0).count()}};
            std::ostringstream os;
            os << (cert.symplectic ? "symplectic" : "not symplectic") << " (certificate: "
               << r["certificate"].get<std::string>()
               << ", closed 2-form space dim " << cert.closed_space_dim << ")\n";
            if (cert.witness) {
                os << "witness:";
                for (const auto& [idx, c] : cert.witness->coeffs())
                    os << " " << rat_str(c) << "*a" << idx[0] << "^a" << idx[1];
                os << "\n";
            }
            emit(r, as_json, os.str());
            return kExitOk;
        }
        if (*cclass) {
            std::string raw;
            LieAlgebra l = load_algebra(file, &raw);
            require_valid(l);
            PForm alpha = one_form_from_spec(l.dim(), form_spec);
            int cl = cartan_class(l, alpha);
            json r = base_report("cartan-class", raw);
            r["cartan_class"] = cl;
            emit(r, as_json, "cartan class " + std::to_string(cl) + "\n");
            return kExitOk;
        }
        if (*coh) {
            std::string raw;
            LieAlgebra l = load_algebra(file, &raw);
            require_valid(l);
            auto betti = cohomology_dims(l);
            json r = base_report("cohomology", raw);
            r["betti"] = betti;
            std::ostringstream os;
            os << "betti numbers:";
            for (int b : betti) os << " " << b;
            os << "\n";
            emit(r, as_json, os.str());
            return kExitOk;
        }
        if (*contr) {
            std::string raw;
            LieAlgebra l = load_algebra(file, &raw);
            require_valid(l);
            std::vector<int> weights;
            {
                std::istringstream is(weights_spec);
                std::string piece;
                while (std::getline(is, piece, ',')) weights.push_back(std::stoi(piece));
            }
            ContractResult res = contract(l, weights);
            json r = base_report("contract", raw);
            std::ostringstream os;
            if (!res.limit) {
                r["decision"] = "no_limit";
                json off = json::array();
                os << "no limit; negative exponent on triples:";
                for (const auto& t : res.offending) {
                    off.push_back({t[0], t[1], t[2]});
                    os << " (" << t[0] << "," << t[1] << "," << t[2] << ")";
                }
                os << "\n";
                r["offending_triples"] = off;
            } else {
                r["decision"] = "limit_exists";
                r["limit"] = serialize_algebra(*res.limit);
                os << "limit algebra:\n" << serialize_algebra(*res.limit);
                if (!form_spec.empty()) {
                    PForm theta = form_from_entries(l.dim(), form_spec);
                    bool surv = transport_symplectic(theta, weights);
                    r["form_transports"] = surv;
                    os << "form transports: " << (surv ? "yes" : "no") << "\n";
                }
            }
            emit(r, as_json, os.str());
            return kExitOk;
        }
        if (*def) {
            std::string raw;
            LieAlgebra l = load_algebra(file, &raw);
            require_valid(l);
            LieAlgebra psi_alg = parse_algebra(slurp(cocycle_path));
            if (psi_alg.dim() != l.dim())
                throw std::runtime_error("cocycle dimension does not match the base algebra");
            TwoCochain psi;
            psi.dim = l.dim();
            for (const auto& [pair, entry] : psi_alg.constants())
                for (const auto& [k, c] : entry) psi.add(pair.first, pair.second, k, c);
            auto t = parse_rational(t_spec);
            if (!t) throw std::runtime_error("malformed --t rational");
            DeformationReport rep = validate_deformation(l, psi);
            json r = base_report("deform", raw);
            r["base_jacobi"] = rep.base_jacobi;
            r["cocycle_condition"] = rep.cocycle_condition;
            r["integrability"] = rep.integrability;
            std::ostringstream os;
            if (rep.ok()) {
                LieAlgebra out = linear_deformation(l, psi, *t);
                r["deformed"] = serialize_algebra(out);
                os << "deformed algebra:\n" << serialize_algebra(out);
            } else {
                r["deformed"] = nullptr;
                os << "deformation fails: base_jacobi=" << rep.base_jacobi
                   << " cocycle=" << rep.cocycle_condition
                   << " integrability=" << rep.integrability << "\n";
            }
            emit(r, as_json, os.str());
            return rep.ok() ? kExitOk : kExitInvalidAlgebra;
        }
        if (*dext) {
            std::string raw;
            LieAlgebra l = load_algebra(file, &raw);
            require_valid(l);
            PForm theta = form_from_entries(l.dim(), form_spec);
            Mat d = parse_matrix(slurp(deriv_path));
            DoubleExtension de = double_extension(l, theta, d);
            json r = base_report("double-extend", raw);
            r["dim"] = de.algebra.dim();
            r["nilpotent"] = de.nilpotent;
            r["algebra"] = serialize_algebra(de.algebra);
            r["theta1"] = witness_json(de.theta1);
            std::ostringstream os;
            os << "extension (dim " << de.algebra.dim() << ", "
               << (de.nilpotent ? "nilpotent" : "not nilpotent") << "):\n"
               << serialize_algebra(de.algebra);
            emit(r, as_json, os.str());
            return kExitOk;
        }
        if (*cat) {
            if (*cat_list) {
                json r = base_report("catalog list", "");
                r["names"] = catalog_names();
                std::ostringstream os;
                for (const auto& n : catalog_names()) os << n << "\n";
                emit(r, as_json, os.str());
                return kExitOk;
            }
            auto entry = catalog_named(cat_name);
            if (!entry) throw std::runtime_error("unknown catalog entry: " + cat_name);
            if (*cat_emit) {
                std::cout << serialize_algebra(entry->algebra);
                return kExitOk;
            }
            json r = base_report("catalog show", cat_name);
            r["name"] = entry->name;
            r["dim"] = entry->algebra.dim();
            r["expected_symplectic"] = entry->symplectic == Expected::Yes  ? "yes"
                                       : entry->symplectic == Expected::No ? "no"
                                                                           : "unknown";
            if (entry->witness) r["witness"] = witness_json(*entry->witness);
            if (!entry->charseq.seq.empty()) r["charseq"] = entry->charseq.seq;
            if (!entry->note.empty()) r["note"] = entry->note;
            r["algebra"] = serialize_algebra(entry->algebra);
            std::ostringstream os;
            os << entry->name << " (dim " << entry->algebra.dim()
               << ", expected symplectic: " << r["expected_symplectic"].get<std::string>()
               << ")\n"
               << serialize_algebra(entry->algebra);
            if (!entry->note.empty()) os << "note: " << entry->note << "\n";
            emit(r, as_json, os.str());
            return kExitOk;
        }
    } catch (const InvalidAlgebraError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidAlgebra;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
