#include "ore/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "ore/expr.hpp"
#include "ore/harness.hpp"
#include "ore/qbinom.hpp"

namespace ore::cli {

namespace {

using nlohmann::json;

bool is_usage_error(errc c) {
    switch (c) {
        case errc::syntax_error:
        case errc::validation_error:
        case errc::unknown_generator:
        case errc::invalid_ring_spec:
        case errc::index_out_of_range:
        case errc::bad_bound_inputs:
        case errc::guard_exceeds_truncation: return true;
        default: return false;
    }
}

struct CommonOpts {
    std::string ring;
    std::string method = "both";
    std::size_t trunc = 24;
    std::size_t guard = 6;
    std::uint64_t seed = 42;
};

ContextPtr make_ring(const std::string& ring) {
    if (ring.empty()) fail(errc::invalid_ring_spec, "--ring is required");
    return RingSpec::parse(ring).make();
}

MulMethod parse_method_single(const std::string& m) {
    if (m == "naive") return MulMethod::naive;
    if (m == "goodearl") return MulMethod::goodearl;
    fail(errc::validation_error, "method must be naive, goodearl or both");
}

json report_to_json(const LemmaReport& r) {
    return json{{"lemma_id", r.lemma_id}, {"ring", r.ring},       {"seed", r.seed},
                {"trials", r.trials},     {"passed", r.passed},   {"witnesses", r.witnesses},
                {"millis", r.millis}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"orecalc -- exact arithmetic in skew polynomial rings R[x;sigma,delta]"};
    app.require_subcommand(1);

    int status = 0;
    CommonOpts common;

    auto add_ring_opt = [&](CLI::App* sub, bool required = true) {
        auto* o = sub->add_option("--ring", common.ring,
                                  "ring spec: QP:p,m,q | TRUNCQ:m | NILQ:p,m,q")
                      ->envname("ORECALC_RING");
        if (required) o->required();
    };
    auto add_method_opt = [&](CLI::App* sub) {
        sub->add_option("--method", common.method, "naive | goodearl | both")
            ->envname("ORECALC_METHOD")
            ->check(CLI::IsMember({"naive", "goodearl", "both"}));
    };

    // ---- qbinom -------------------------------------------------------------
    long qb_n = 0, qb_i = 0;
    std::string qb_q, qb_field = "Q";
    auto* cmd_qbinom =
        app.add_subcommand("qbinom", "Gaussian binomial C(n,i)_t, or its value at t=q");
    cmd_qbinom->add_option("n", qb_n)->required();
    cmd_qbinom->add_option("i", qb_i)->required();
    cmd_qbinom->add_option("--q", qb_q, "evaluate at this scalar instead of printing the polynomial");
    cmd_qbinom->add_option("--field", qb_field, "Q (default) or F<p>")->envname("ORECALC_FIELD");
    cmd_qbinom->callback([&] {
        if (qb_q.empty()) {
            out << gauss_binom(qb_n, qb_i).to_string() << "\n";
        } else {
            FieldSpec fs = FieldSpec::parse(qb_field);
            Scalar q = Scalar::parse(qb_q, fs);
            out << qbinom_eval(qb_n, qb_i, q).to_string() << "\n";
        }
    });

    // ---- mul ----------------------------------------------------------------
    std::string mul_lhs, mul_rhs;
    auto* cmd_mul = app.add_subcommand("mul", "multiply two expressions");
    cmd_mul->add_option("lhs", mul_lhs)->required();
    cmd_mul->add_option("rhs", mul_rhs)->required();
    add_ring_opt(cmd_mul);
    add_method_opt(cmd_mul);
    cmd_mul->callback([&] {
        ContextPtr ctx = make_ring(common.ring);
        ExprPtr product = parse_expression("(" + mul_lhs + ")*(" + mul_rhs + ")");
        if (common.method == "both") {
            OrePoly a = evaluate(product, ctx, MulMethod::naive);
            OrePoly b = evaluate(product, ctx, MulMethod::goodearl);
            out << a.to_string() << "\n";
            if (a == b) {
                out << "methods agree\n";
            } else {
                out << "METHODS DISAGREE: goodearl gives " << b.to_string() << "\n";
                status = 1;
            }
        } else {
            out << evaluate(product, ctx, parse_method_single(common.method)).to_string() << "\n";
        }
    });

    // ---- expand -------------------------------------------------------------
    std::string ex_a;
    std::size_t ex_n = 0, ex_m = 0;
    auto* cmd_expand = app.add_subcommand("expand", "(a*x^n)^m via the iterated closed form");
    cmd_expand->add_option("a", ex_a, "ring element expression (no x)")->required();
    cmd_expand->add_option("n", ex_n)->required();
    cmd_expand->add_option("m", ex_m)->required();
    add_ring_opt(cmd_expand);
    add_method_opt(cmd_expand);
    cmd_expand->callback([&] {
        ContextPtr ctx = make_ring(common.ring);
        ExprPtr e = parse_expression(ex_a);
        if (expr_contains_x(e))
            fail(errc::validation_error, "expand takes a base-ring element; x is not allowed");
        AlgebraElement a = evaluate(e, ctx).coeff(0);
        if (common.method == "naive") {
            out << pow_naive(OrePoly::monomial(ctx, a, ex_n), ex_m).to_string() << "\n";
            return;
        }
        OrePoly expanded = iterated_expand(ctx, a, ex_n, ex_m);
        out << expanded.to_string() << "\n";
        if (common.method == "both") {
            OrePoly naive = pow_naive(OrePoly::monomial(ctx, a, ex_n), ex_m);
            if (expanded == naive) {
                out << "methods agree\n";
            } else {
                out << "METHODS DISAGREE: naive power gives " << naive.to_string() << "\n";
                status = 1;
            }
        }
    });

    // ---- coeff ----------------------------------------------------------------
    std::string co_expr;
    std::size_t co_k = 0;
    auto* cmd_coeff = app.add_subcommand("coeff", "left coefficient of x^k");
    cmd_coeff->add_option("expr", co_expr)->required();
    cmd_coeff->add_option("k", co_k)->required();
    add_ring_opt(cmd_coeff);
    add_method_opt(cmd_coeff);
    cmd_coeff->callback([&] {
        ContextPtr ctx = make_ring(common.ring);
        MulMethod m = common.method == "goodearl" ? MulMethod::goodearl : MulMethod::naive;
        out << evaluate(parse_expression(co_expr), ctx, m).coeff(co_k).to_string() << "\n";
    });

    // ---- quasi-inverse --------------------------------------------------------
    std::string qi_expr;
    auto* cmd_qi = app.add_subcommand("quasi-inverse",
                                      "s with r + s + r*s = 0, as a truncated series");
    cmd_qi->add_option("expr", qi_expr)->required();
    add_ring_opt(cmd_qi);
    cmd_qi->add_option("--trunc", common.trunc, "truncation order T")->envname("ORECALC_TRUNC");
    cmd_qi->add_option("--guard", common.guard, "zero-coefficient window for certification")
        ->envname("ORECALC_GUARD");
    cmd_qi->callback([&] {
        ContextPtr ctx = make_ring(common.ring);
        OrePoly r = evaluate(parse_expression(qi_expr), ctx);
        OreSeries s = quasi_inverse(r, common.trunc);
        out << "quasi-inverse of " << r.to_string() << " in " << ctx->id() << ", T="
            << common.trunc << "\n";
        bool any = false;
        for (std::size_t k = 0; k < s.trunc_order(); ++k) {
            if (s.coeff(k).is_zero()) continue;
            any = true;
            out << "  x^" << k << ": " << s.coeff(k).to_string() << "\n";
        }
        if (!any) out << "  0\n";
        auto qc = quasi_check(r, s);
        out << "identity r + s + r*s = 0 (mod x^" << common.trunc << "): "
            << (qc.ok ? "ok" : "FAILED") << "\n";
        if (!qc.ok) status = 1;
        auto det = detect_polynomial(s, common.guard);
        if (det.certified) {
            if (det.degree)
                out << "certified polynomial of degree " << *det.degree << " to order "
                    << common.trunc << " (guard " << common.guard << ")\n";
            else
                out << "certified zero to order " << common.trunc << "\n";
        } else {
            out << "not certified polynomial at truncation " << common.trunc << " (guard "
                << common.guard << ")\n";
        }
    });

    // ---- nildeg / tordeg --------------------------------------------------------
    std::string deg_expr;
    auto* cmd_nildeg = app.add_subcommand("nildeg", "least N with delta^N(a) = 0");
    cmd_nildeg->add_option("expr", deg_expr)->required();
    add_ring_opt(cmd_nildeg);
    cmd_nildeg->callback([&] {
        ContextPtr ctx = make_ring(common.ring);
        ExprPtr e = parse_expression(deg_expr);
        if (expr_contains_x(e))
            fail(errc::validation_error, "nildeg takes a base-ring element; x is not allowed");
        out << nildeg(*ctx, evaluate(e, ctx).coeff(0)) << "\n";
    });
    auto* cmd_tordeg = app.add_subcommand("tordeg", "least m >= 1 with sigma^m(a) = a");
    cmd_tordeg->add_option("expr", deg_expr)->required();
    add_ring_opt(cmd_tordeg);
    cmd_tordeg->callback([&] {
        ContextPtr ctx = make_ring(common.ring);
        ExprPtr e = parse_expression(deg_expr);
        if (expr_contains_x(e))
            fail(errc::validation_error, "tordeg takes a base-ring element; x is not allowed");
        out << tordeg(*ctx, evaluate(e, ctx).coeff(0)) << "\n";
    });

    // ---- verify -------------------------------------------------------------
    std::string only, json_path;
    auto* cmd_verify = app.add_subcommand("verify", "run the full lemma suite on a ring");
    add_ring_opt(cmd_verify);
    cmd_verify->add_option("--seed", common.seed, "master RNG seed")->envname("ORECALC_SEED");
    cmd_verify->add_option("--only", only, "run a single lemma")
        ->check(CLI::IsMember(std::vector<std::string>(lemma_ids.begin(), lemma_ids.end())));
    cmd_verify->add_option("--trunc", common.trunc, "truncation order for series checks")
        ->envname("ORECALC_TRUNC");
    cmd_verify->add_option("--guard", common.guard)->envname("ORECALC_GUARD");
    auto* json_opt = cmd_verify->add_option("--json", json_path,
                                            "write the JSON report here ('-' for stdout)");
    json_opt->expected(0, 1);
    cmd_verify->callback([&] {
        ContextPtr ctx = make_ring(common.ring);
        SuiteOptions opts;
        opts.only = only;
        opts.trunc = common.trunc;
        opts.guard = common.guard;
        auto reports = lemma_suite(ctx, common.seed, opts);
        out << render_reports(reports);
        if (json_opt->count() > 0) {
            json doc;
            doc["ring"] = ctx->id();
            doc["seed"] = common.seed;
            doc["passed"] = suite_passed(reports);
            doc["lemmas"] = json::array();
            for (const auto& r : reports) doc["lemmas"].push_back(report_to_json(r));
            if (json_path.empty() || json_path == "-") {
                out << doc.dump(2) << "\n";
            } else {
                std::ofstream f(json_path);
                if (!f) fail(errc::validation_error, "cannot write " + json_path);
                f << doc.dump(2) << "\n";
            }
        }
        if (!suite_passed(reports)) status = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const OreError& e) {
        err << "error: " << e.what() << "\n";
        return is_usage_error(e.code()) ? 2 : 1;
    }
    return status;
}

}  // namespace ore::cli
