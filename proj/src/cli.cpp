#include "qfx/cli.hpp"

#include <atomic>
#include <chrono>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qfx/hyperell.hpp"
#include "qfx/parallel.hpp"
#include "qfx/qforms.hpp"
#include "qfx/transfer.hpp"

namespace qfx::cli {

using json = nlohmann::ordered_json;

namespace {

struct GlobalOpts {
    std::string field = "gf(3)";
    uint64_t seed = kDefaultSeed;
    unsigned jobs = 1;
    bool as_json = false;
};

Field make_base_field(const GlobalOpts& g) {
    FieldSpec spec = parse_field_designator(g.field);
    return make_field(spec.p, spec.k);
}

json base_doc(const char* command, const Field& field) {
    json doc;
    doc["schema"] = 1;
    doc["command"] = command;
    doc["field"] = field->designator();
    return doc;
}

void emit(const json& doc, const std::string& summary, bool as_json, std::ostream& out) {
    if (as_json)
        out << doc.dump(2) << "\n";
    else
        out << summary << "\n";
}

json certificate_json(const SqRefCertificate& cert) {
    json doc;
    doc["f"] = cert.f.str();
    doc["lc"] = cert.f.is_zero() ? "0" : cert.f.lc().str();
    json classes = json::array();
    QuotAlg A(cert.f);
    int bound = sqref_degree_bound(cert.f.deg() < 0 ? 0 : cert.f.deg());
    for (const auto& [alpha, g] : cert.entries) {
        json entry;
        entry["alpha"] = alpha.str();
        entry["witness_g"] = g.str();
        json checks;
        checks["coprime"] = gcd(A.monic_f(), g).is_constant();
        checks["class_match"] = A.same_square_class(g, alpha);
        checks["square_mod"] = is_square_mod(cert.f, g);
        checks["degree_bound"] = g.deg() <= bound;
        entry["checks"] = checks;
        classes.push_back(entry);
    }
    doc["classes"] = classes;
    return doc;
}

json verdict_json(const IsotropyVerdict& v) {
    json doc;
    doc["isotropic"] = v.isotropic;
    doc["justification"] = justification_name(v.justification);
    if (v.obstruction) doc["obstruction"] = v.obstruction->str();
    if (v.slot_partner) doc["slot_partner"] = v.slot_partner->str();
    if (!v.local_table.empty()) {
        json table = json::array();
        for (const auto& c : v.local_table) {
            json row;
            row["place"] = c.place.str();
            row["isotropic"] = c.isotropic;
            table.push_back(row);
        }
        doc["local_table"] = table;
    }
    return doc;
}

std::vector<std::string> split_entries(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == ';') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

const char kBanner[] =
    "!!! CONSISTENCY FAILURE: a refutation was produced over a finite base field.\n"
    "!!! That outcome contradicts the library's own certification guarantees\n"
    "!!! and indicates an implementation bug, not a mathematical discovery.\n";

int cmd_certify(const GlobalOpts& g, const std::string& poly_text, bool exhaustive,
                std::ostream& out, std::ostream& err) {
    Field field = make_base_field(g);
    Poly f = parse_poly(field, poly_text);
    CertifyResult result = certify(f, CertifyOptions{exhaustive});
    if (std::holds_alternative<SqRefRefutation>(result)) {
        const auto& ref = std::get<SqRefRefutation>(result);
        err << kBanner;
        json doc = base_doc("certify-sqref", field);
        doc["refuted"] = true;
        doc["f"] = ref.f.str();
        doc["alpha"] = ref.alpha.str();
        try {
            DiagForm phi = counterexample_form(ref.f, ref.alpha);
            doc["counterexample_form"] = phi.str();
        } catch (const std::exception& e) {
            doc["counterexample_form_error"] = e.what();
        }
        emit(doc, "REFUTED: " + ref.f.str() + " at class " + ref.alpha.str(), g.as_json, out);
        return kExitRefutation;
    }
    const auto& cert = std::get<SqRefCertificate>(result);
    json doc = base_doc("certify-sqref", field);
    doc["refuted"] = false;
    doc.update(certificate_json(cert));
    emit(doc, "certified: " + cert.f.str() + " (" + std::to_string(cert.entries.size()) + " classes)",
         g.as_json, out);
    return kExitOk;
}

int cmd_isotropy(const GlobalOpts& g, const std::string& form_text, int witness_cap,
                 std::ostream& out, std::ostream& err) {
    (void)err;
    Field field = make_base_field(g);
    DiagForm phi = DiagForm::from_strings(field, split_entries(form_text));
    IsotropyVerdict v = is_isotropic(phi);
    json doc = base_doc("isotropy", field);
    doc["form"] = phi.str();
    doc.update(verdict_json(v));
    if (witness_cap >= 0 && phi.dim() >= 2) {
        auto w = vector_search(phi, witness_cap);
        if (w) {
            json witness = json::array();
            for (const auto& x : *w) witness.push_back(x.str());
            doc["witness"] = witness;
        } else {
            doc["witness"] = nullptr;
        }
    }
    std::string summary = phi.str();
    summary += v.isotropic ? " isotropic" : " anisotropic";
    summary += std::string(" [") + justification_name(v.justification) + "]";
    emit(doc, summary, g.as_json, out);
    return kExitOk;
}

int cmd_ramify(const GlobalOpts& g, const std::string& ftext, const std::string& gtext,
               std::ostream& out) {
    Field field = make_base_field(g);
    Poly f = parse_poly(field, ftext);
    Poly h = parse_poly(field, gtext);
    RamSeq rho = ramify(f, h);
    json doc = base_doc("ramify", field);
    doc["f"] = f.str();
    doc["g"] = h.str();
    json entries = json::array();
    for (const auto& [place, cls] : rho.entries()) {
        json e;
        e["place"] = place.str();
        e["class_witness"] = cls.witness.str();
        entries.push_back(e);
    }
    doc["entries"] = entries;
    doc["support_size"] = rho.support_size();
    std::string summary = "support:";
    for (const auto& [place, cls] : rho.entries()) summary += " (" + place.str() + ")";
    emit(doc, summary, g.as_json, out);
    return kExitOk;
}

int cmd_kornblum(const GlobalOpts& g, const std::string& ftext, const std::string& g0text,
                 const std::string& parity, int cap, std::ostream& out) {
    Field field = make_base_field(g);
    Poly f = parse_poly(field, ftext);
    Poly g0 = parse_poly(field, g0text);
    check(parity == "odd" || parity == "even", "BadParity", "--parity must be odd or even");
    Poly q = kornblum_find(f, g0, parity == "odd" ? 1 : 0, cap);
    json doc = base_doc("kornblum", field);
    doc["f"] = f.str();
    doc["g0"] = g0.str();
    doc["parity"] = parity;
    doc["q"] = q.str();
    doc["degree"] = q.deg();
    emit(doc, "q = " + q.str(), g.as_json, out);
    return kExitOk;
}

int cmd_hyperell(const GlobalOpts& g, const std::string& poly_text, int cap, std::ostream& out) {
    Field field = make_base_field(g);
    Poly f = parse_poly(field, poly_text);
    json doc = base_doc("hyperell", field);
    doc["f"] = f.str();
    std::optional<OddPoint> pt;
    if (cap >= 1) {
        pt = odd_point_search(f, cap);
        doc["cap"] = cap;
    } else {
        MinOddDegreeResult r = min_odd_degree(f);
        pt = r.point;
        doc["cap"] = r.cap_used;
        doc["complete"] = r.complete;
    }
    doc["found"] = pt.has_value();
    std::string summary = "no odd-degree point up to the cap";
    if (pt) {
        doc["degree"] = pt->degree;
        doc["p"] = pt->p.str();
        doc["y"] = pt->y.str();
        summary = "degree " + std::to_string(pt->degree) + " point: p = " + pt->p.str() + ", y = " + pt->y.str();
    }
    emit(doc, summary, g.as_json, out);
    return kExitOk;
}

int cmd_transfer(const GlobalOpts& g, const std::string& ftext, const std::string& gtext, int ext,
                 uint64_t budget, std::ostream& out) {
    Field field = make_base_field(g);
    Poly f = parse_poly(field, ftext);
    Poly h = parse_poly(field, gtext);
    QuadSystem sys = build_system(f, h);
    json doc = base_doc("transfer-curve", field);
    doc["f"] = f.str();
    doc["g"] = h.str();
    doc["system_dims"] = json::array({sys.grams.size(), sys.n + 1});
    doc["pencil_ok"] = pencil_rank_check(sys);
    PointEnumResult pts = point_enum(sys, ext, budget);
    doc["ext"] = ext;
    doc["points_cprime"] = pts.solutions.size();
    doc["points_c"] = pts.points_c;
    EquivalenceReport eq = equivalence_check(f, h, ext, budget);
    json eqj;
    eqj["lhs"] = eq.lhs;
    eqj["rhs"] = eq.rhs;
    eqj["agree"] = eq.agree;
    if (eq.witness_a) eqj["witness_a"] = eq.witness_a->str();
    doc["equivalence"] = eqj;
    std::string summary = "pencil " + std::string(doc["pencil_ok"].get<bool>() ? "ok" : "FAILED") +
                          ", C-points " + std::to_string(pts.points_c) +
                          ", equivalence " + (eq.agree ? "agrees" : "DISAGREES");
    emit(doc, summary, g.as_json, out);
    return kExitOk;
}

int cmd_lgp_scan(const GlobalOpts& g, size_t samples, int entry_deg, std::ostream& out,
                 std::ostream& err) {
    Field field = make_base_field(g);
    auto t0 = std::chrono::steady_clock::now();
    struct Item {
        bool local_iso = false, slot_iso = false, refine_ok = true;
        std::string form;
    };
    std::vector<Item> items(samples);
    parallel_for(samples, g.jobs, [&](size_t i) {
        Rng rng(mix_seed(g.seed, 0x16b4 + i));
        std::vector<Poly> entries;
        for (int e = 0; e < 4; ++e) entries.push_back(random_nonzero_poly(field, entry_deg, rng));
        DiagForm phi = DiagForm::from_polys(entries);
        Item& item = items[i];
        item.form = phi.str();
        bool local = true;
        for (const Place& p : support_places(phi)) local = local && local_isotropy(phi, p);
        item.local_iso = local;
        SlotShape shape = to_slot_shape(phi);
        auto partner = find_slot_partner(shape.f, shape.g, shape.h);
        item.slot_iso = partner.has_value();
        if (!item.local_iso && !item.slot_iso) {
            // an anisotropic form must fail locally somewhere on the
            // ramification support of its slot shape
            DiagForm canon = DiagForm::from_polys({shape.f, -shape.g, -shape.h, shape.g * shape.h});
            bool failed_somewhere = false;
            RamSeq ram = ramify(shape.g, shape.h);
            std::vector<Place> places = ram.support();
            for (const Place& p : support_places(canon))
                places.push_back(p);
            for (const Place& p : places)
                if (!local_isotropy(canon, p)) failed_somewhere = true;
            item.refine_ok = failed_somewhere;
        }
    });
    size_t agree = 0, isotropic = 0, refine_ok = 0, anisotropic = 0;
    for (const auto& it : items) {
        if (it.local_iso == it.slot_iso) ++agree;
        if (it.local_iso) ++isotropic;
        else {
            ++anisotropic;
            if (it.refine_ok) ++refine_ok;
        }
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    json doc = base_doc("lgp-scan", field);
    doc["parameters"] = {{"samples", samples}, {"entry_deg", entry_deg}, {"seed", g.seed}};
    doc["counters"] = {{"items", samples},
                       {"agree", agree},
                       {"isotropic", isotropic},
                       {"anisotropic", anisotropic},
                       {"refine_ok", refine_ok}};
    emit(doc,
         "items " + std::to_string(samples) + ", agree " + std::to_string(agree) + ", isotropic " +
             std::to_string(isotropic) + ", anisotropic " + std::to_string(anisotropic),
         g.as_json, out);
    err << "elapsed_ms=" << ms.count() << "\n";
    if (agree != samples || refine_ok != anisotropic) {
        err << "!!! CONSISTENCY FAILURE: local scan and slot-partner route disagree\n";
        return kExitError;
    }
    return kExitOk;
}

int cmd_corpus(const GlobalOpts& g, int degree, bool exhaustive, std::ostream& out,
               std::ostream& err) {
    Field field = make_base_field(g);
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Poly> inputs;
    uint64_t count = count_polys_of_degree(field, degree);
    for (uint64_t ord = 0; ord < count; ++ord) {
        Poly f = nth_poly_of_degree(field, degree, ord);
        if (is_squarefree(f)) inputs.push_back(f);
    }
    struct Row {
        std::string f;
        std::string status;
        size_t classes = 0;
    };
    std::vector<Row> rows(inputs.size());
    std::atomic<size_t> certified{0}, refuted{0}, errors{0};
    parallel_for(inputs.size(), g.jobs, [&](size_t i) {
        Row& row = rows[i];
        row.f = inputs[i].str();
        try {
            CertifyResult r = certify(inputs[i], CertifyOptions{exhaustive});
            if (std::holds_alternative<SqRefCertificate>(r)) {
                row.status = "certified";
                row.classes = std::get<SqRefCertificate>(r).entries.size();
                ++certified;
            } else {
                row.status = "refuted";
                ++refuted;
            }
        } catch (const std::exception& e) {
            row.status = std::string("error: ") + e.what();
            ++errors;
        }
    });
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    json doc = base_doc("corpus", field);
    doc["parameters"] = {{"kind", "sqref"}, {"degree", degree}, {"seed", g.seed}, {"exhaustive", exhaustive}};
    json items = json::array();
    for (const auto& row : rows) {
        json r;
        r["f"] = row.f;
        r["status"] = row.status;
        if (row.status == "certified") r["classes"] = row.classes;
        items.push_back(r);
    }
    doc["items"] = items;
    doc["counters"] = {{"items", rows.size()},
                       {"certified", certified.load()},
                       {"refuted", refuted.load()},
                       {"errors", errors.load()}};
    emit(doc,
         "items " + std::to_string(rows.size()) + ", certified " + std::to_string(certified.load()) +
             ", refuted " + std::to_string(refuted.load()) + ", errors " + std::to_string(errors.load()),
         g.as_json, out);
    err << "elapsed_ms=" << ms.count() << "\n";
    if (refuted.load() > 0) {
        err << kBanner;
        return kExitRefutation;
    }
    return errors.load() == 0 ? kExitOk : kExitError;
}

}  // namespace

FieldSpec parse_field_designator(const std::string& text) {
    check(text.size() > 4 && text.substr(0, 3) == "gf(" && text.back() == ')', "BadFieldDesignator",
          "expected gf(p) or gf(p^k): " + text);
    std::string inner = text.substr(3, text.size() - 4);
    uint64_t base = 0, exp = 1;
    size_t caret = inner.find('^');
    auto parse_num = [&](const std::string& s) {
        check(!s.empty() && s.find_first_not_of("0123456789") == std::string::npos,
              "BadFieldDesignator", "expected a number in " + text);
        return std::stoull(s);
    };
    if (caret == std::string::npos) {
        uint64_t n = parse_num(inner);
        check(n >= 3, "BadFieldDesignator", "field size must be an odd prime power >= 3");
        uint64_t p = n;
        for (uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                p = d;
                break;
            }
        uint64_t k = 0, m = n;
        while (m > 1 && m % p == 0) {
            m /= p;
            ++k;
        }
        check(m == 1, "BadFieldDesignator", std::to_string(n) + " is not a prime power");
        return FieldSpec{p, k};
    }
    uint64_t p = parse_num(inner.substr(0, caret));
    uint64_t k = parse_num(inner.substr(caret + 1));
    return FieldSpec{p, k};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact quadratic-form and tame-symbol computations over F_q(X)"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--field", g.field, "base field, gf(p) or gf(p^k)")->capture_default_str();
    app.add_option("--seed", g.seed, "seed for all derived randomness")->capture_default_str();
    app.add_option("--jobs", g.jobs, "worker count for corpus scans")->capture_default_str();
    app.add_flag("--json", g.as_json, "machine-readable output");

    std::string poly_text, form_text, ftext, gtext, parity = "odd";
    bool exhaustive = false;
    int witness_cap = -1, cap = 0, ext = 1, degree = 2, entry_deg = 3;
    uint64_t budget = 20000000;
    size_t samples = 500;

    auto* certify_cmd = app.add_subcommand("certify-sqref", "certify square-reflexivity of a square-free polynomial");
    certify_cmd->add_option("--poly", poly_text, "the polynomial f")->required();
    certify_cmd->add_flag("--exhaustive", exhaustive, "skip the fast path; bounded search only");

    auto* isotropy_cmd = app.add_subcommand("isotropy", "decide isotropy of a diagonal form over F_q(X)");
    isotropy_cmd->add_option("--form", form_text, "semicolon-separated diagonal entries")->required();
    isotropy_cmd->add_option("--witness-cap", witness_cap, "also search for an isotropic vector up to this degree");

    auto* ramify_cmd = app.add_subcommand("ramify", "ramification sequence of the symbol {f, g}");
    ramify_cmd->add_option("--f", ftext)->required();
    ramify_cmd->add_option("--g", gtext)->required();

    auto* kornblum_cmd = app.add_subcommand("kornblum", "monic irreducible in a residue class");
    kornblum_cmd->add_option("--f", ftext)->required();
    kornblum_cmd->add_option("--g0", gtext)->required();
    kornblum_cmd->add_option("--parity", parity, "odd or even")->capture_default_str();
    kornblum_cmd->add_option("--cap", cap, "degree cap")->required();

    auto* hyperell_cmd = app.add_subcommand("hyperell", "odd-degree point search on Y^2 = f(X)");
    hyperell_cmd->add_option("--poly", poly_text)->required();
    hyperell_cmd->add_option("--cap", cap, "degree cap (0: the complete bound)");

    auto* transfer_cmd = app.add_subcommand("transfer-curve", "transfer-curve system, pencil check and point counts");
    transfer_cmd->add_option("--f", ftext)->required();
    transfer_cmd->add_option("--g", gtext)->required();
    transfer_cmd->add_option("--ext", ext, "extension degree m for F_{q^m}")->capture_default_str();
    transfer_cmd->add_option("--budget", budget, "projective enumeration budget")->capture_default_str();

    auto* lgp_cmd = app.add_subcommand("lgp-scan", "random dim-4 local-global cross-check corpus");
    lgp_cmd->add_option("--samples", samples)->capture_default_str();
    lgp_cmd->add_option("--entry-deg", entry_deg)->capture_default_str();

    auto* corpus_cmd = app.add_subcommand("corpus", "certify all square-free polynomials of a degree");
    corpus_cmd->add_option("--degree", degree)->required();
    corpus_cmd->add_flag("--exhaustive", exhaustive, "bounded search only");

    std::vector<std::string> argv(args);
    try {
        std::vector<const char*> cargv;
        cargv.push_back("qfx");
        for (const auto& a : argv) cargv.push_back(a.c_str());
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    set_global_seed(g.seed);
    try {
        if (certify_cmd->parsed()) return cmd_certify(g, poly_text, exhaustive, out, err);
        if (isotropy_cmd->parsed()) return cmd_isotropy(g, form_text, witness_cap, out, err);
        if (ramify_cmd->parsed()) return cmd_ramify(g, ftext, gtext, out);
        if (kornblum_cmd->parsed()) return cmd_kornblum(g, ftext, gtext, parity, cap, out);
        if (hyperell_cmd->parsed()) return cmd_hyperell(g, poly_text, cap, out);
        if (transfer_cmd->parsed()) return cmd_transfer(g, ftext, gtext, ext, budget, out);
        if (lgp_cmd->parsed()) return cmd_lgp_scan(g, samples, entry_deg, out, err);
        if (corpus_cmd->parsed()) return cmd_corpus(g, degree, exhaustive, out, err);
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        err << "fatal: " << e.what() << "\n";
        return kExitError;
    }
    err << "usage error: no subcommand\n";
    return kExitUsage;
}

}  // namespace qfx::cli
