// Copyright 2026 The interfere Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "interfere/cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <omp.h>

#include <CLI11.hpp>

#include "interfere/combinat.hpp"
#include "interfere/error.hpp"
#include "interfere/genfunc.hpp"
#include "interfere/identities.hpp"
#include "interfere/matrix.hpp"
#include "interfere/matrix_io.hpp"
#include "interfere/parallel.hpp"
#include "interfere/transition.hpp"

namespace interfere::cli {

namespace {

const std::vector<std::string> kSuiteOrder = {
    "lemma2",        "theorem1",       "theorem2",       "corollary1",     "muir",
    "classical-convolution", "two-particle", "three-particle", "sum-difference", "single-mode-bunching",
};

// Newline-delimited JSON object builder; numbers use format_number.
class JsonObject {
public:
    JsonObject &add(std::string_view key, std::string_view value) {
        std::string quoted = "\"";
        for (char c : value) {
            if (c == '"' || c == '\\') quoted.push_back('\\');
            quoted.push_back(c);
        }
        quoted.push_back('"');
        return raw(key, quoted);
    }
    JsonObject &add(std::string_view key, const char *value) { return add(key, std::string_view(value)); }
    JsonObject &add(std::string_view key, double value) { return raw(key, format_number(value)); }
    JsonObject &add(std::string_view key, std::size_t value) { return raw(key, std::to_string(value)); }
    JsonObject &add(std::string_view key, int value) { return raw(key, std::to_string(value)); }
    JsonObject &add(std::string_view key, bool value) { return raw(key, value ? "true" : "false"); }
    JsonObject &add(std::string_view key, const std::vector<double> &values) {
        std::string list = "[";
        for (std::size_t k = 0; k < values.size(); ++k) {
            if (k) list += ",";
            list += format_number(values[k]);
        }
        return raw(key, list + "]");
    }
    JsonObject &raw(std::string_view key, std::string_view value) {
        if (!body_.empty()) body_ += ",";
        body_ += "\"";
        body_ += key;
        body_ += "\":";
        body_ += value;
        return *this;
    }
    std::string str() const { return "{" + body_ + "}"; }

private:
    std::string body_;
};

std::string csv_pattern(const Occupation &occ) { return occ.to_string(':'); }

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw Error(ErrorKind::InvalidArgument, "--matrix: bad " + std::string(what) + " '" + std::string(text) + "'");
    }
    return value;
}

std::vector<double> parse_reals(std::string_view text, std::string_view flag) {
    std::vector<double> out;
    std::stringstream ss{std::string(text)};
    std::string token;
    while (std::getline(ss, token, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(token, &used));
            if (used != token.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception &) {
            throw Error(ErrorKind::InvalidArgument, std::string(flag) + ": malformed number '" + token + "'");
        }
    }
    if (out.empty()) throw Error(ErrorKind::InvalidArgument, std::string(flag) + ": empty list");
    return out;
}

Occupation parse_pattern(const std::string &text, std::string_view flag) {
    try {
        return Occupation::parse(text);
    } catch (const Error &e) {
        throw Error(ErrorKind::InvalidArgument, std::string(flag) + ": " + e.what());
    }
}

void require_length(const Occupation &occ, std::size_t modes, std::string_view flag) {
    if (occ.size() != modes) {
        throw Error(ErrorKind::DimensionMismatch, std::string(flag) + ": pattern has " + std::to_string(occ.size()) +
                                                      " modes, matrix has " + std::to_string(modes));
    }
}

// Re-raises an Error with the flag name in front of its message.
template <typename Fn>
auto blame_flag(std::string_view flag, Fn fn) {
    try {
        return fn();
    } catch (const Error &e) {
        std::string_view message = e.what();
        const std::string_view kind = to_string(e.kind());
        if (message.substr(0, kind.size() + 2) == std::string(kind) + ": ") message.remove_prefix(kind.size() + 2);
        if (message.substr(0, flag.size()) == flag) throw;
        throw Error(e.kind(), std::string(flag) + ": " + std::string(message), e.value());
    }
}

ComplexMatrix load_matrix(const ScenarioConfig &config) {
    return blame_flag("--matrix", [&] { return resolve_matrix_source(config.matrix_source, config.seed); });
}

UnitaryMatrix load_unitary(const ScenarioConfig &config) {
    const ComplexMatrix m = load_matrix(config);
    return blame_flag("--matrix", [&] { return validate_unitary(m, config.unitary_tolerance); });
}

Budget budget_of(const ScenarioConfig &config) {
    Budget b;
    b.max_particles = config.particle_budget;
    return b;
}

std::string render_report(const IdentityReport &r, OutputFormat format) {
    const std::string in = r.pattern ? r.pattern->input.to_string() : "-";
    const std::string out = r.pattern ? r.pattern->output.to_string() : "-";
    if (format == OutputFormat::Csv) {
        const std::string name = r.relation.empty() ? r.identity : r.identity + ":" + r.relation;
        return name + "," + std::to_string(r.modes) + "," + (r.pattern ? csv_pattern(r.pattern->input) : "-") + "," +
               (r.pattern ? csv_pattern(r.pattern->output) : "-") + "," + format_number(r.residual) + "," +
               (r.passed ? "true" : "false");
    }
    JsonObject j;
    j.add("identity", r.identity);
    if (!r.relation.empty()) j.add("relation", r.relation);
    j.add("N", r.modes).add("input", in).add("output", out);
    j.add("residual", r.residual).add("raw_residual", r.raw_residual);
    j.add("term_count", r.term_count).add("normalizer", r.normalizer);
    if (!r.sub_residuals.empty()) {
        JsonObject subs;
        for (const SubResidual &s : r.sub_residuals) subs.add(s.name, s.residual);
        j.raw("sub_residuals", subs.str());
    }
    j.add("passed", r.passed);
    return j.str();
}

std::vector<std::string> expand_suite(const std::string &suite) {
    std::vector<std::string> requested;
    std::stringstream ss(suite);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token == "all") {
            requested = kSuiteOrder;
            continue;
        }
        if (std::find(kSuiteOrder.begin(), kSuiteOrder.end(), token) == kSuiteOrder.end()) {
            throw Error(ErrorKind::InvalidArgument, "--suite: unknown identity '" + token + "'");
        }
        if (std::find(requested.begin(), requested.end(), token) == requested.end()) requested.push_back(token);
    }
    if (requested.empty()) throw Error(ErrorKind::InvalidArgument, "--suite: no identities requested");
    // Run in the canonical order regardless of how they were listed.
    std::vector<std::string> ordered;
    for (const std::string &name : kSuiteOrder) {
        if (std::find(requested.begin(), requested.end(), name) != requested.end()) ordered.push_back(name);
    }
    return ordered;
}

std::vector<std::pair<std::size_t, std::size_t>> mode_pairs(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) out.emplace_back(a, b);
    }
    return out;
}

std::vector<std::array<std::size_t, 3>> mode_triples(std::size_t n) {
    std::vector<std::array<std::size_t, 3>> out;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            for (std::size_t c = b + 1; c < n; ++c) out.push_back({a, b, c});
        }
    }
    return out;
}

std::vector<IdentityReport> run_suite(const std::string &name, const UnitaryMatrix &u, const ScenarioConfig &config) {
    const std::size_t n = u.size();
    CheckOptions options;
    options.tolerance = config.tolerance;
    options.budget = budget_of(config);
    if (n > options.budget.max_modes) {
        throw Error(ErrorKind::BudgetExceeded, std::to_string(n) + " modes exceed the budget of " +
                                                   std::to_string(options.budget.max_modes));
    }
    const int threads = config.threads;
    const ComplexMatrix &a = u.matrix();

    if (name == "lemma2" || name == "theorem1" || name == "theorem2") {
        const std::vector<PatternPair> pairs = all_pattern_pairs(n, config.particle_budget);
        if (name == "lemma2") {
            return parallel_map_with_cache(a, pairs.size(), threads, [&](PatternCache &c, std::size_t k) {
                return check_lemma2(c, pairs[k], options);
            });
        }
        if (name == "theorem1") {
            return parallel_map_with_cache(a, pairs.size(), threads, [&](PatternCache &c, std::size_t k) {
                return check_theorem1(c, pairs[k], options);
            });
        }
        // Direct evaluation, then the same patterns through the dilation.
        std::vector<IdentityReport> direct = parallel_map_with_cache(
            a, pairs.size(), threads, [&](PatternCache &c, std::size_t k) { return check_theorem2(c, pairs[k], options); });
        const Dilation dilation = unitary_dilation(a);
        CheckOptions dilated_options = options;
        dilated_options.budget.max_modes = dilation.unitary.size();
        const std::vector<IdentityReport> dilated = parallel_map_with_cache(
            dilation.unitary.matrix(), pairs.size(), threads, [&](PatternCache &c, std::size_t k) {
                const PatternPair padded{pairs[k].input.padded(c.modes()), pairs[k].output.padded(c.modes())};
                return check_theorem1(c, padded, dilated_options);
            });
        for (std::size_t k = 0; k < direct.size(); ++k) {
            direct[k].sub_residuals.push_back({"dilation", dilated[k].residual});
            direct[k].passed = direct[k].passed && dilated[k].passed;
        }
        return direct;
    }
    if (name == "corollary1") return {check_corollary1(a, options)};
    if (name == "muir") return {check_muir(a, options)};
    if (name == "classical-convolution") {
        std::vector<std::pair<PatternPair, Occupation>> items;
        for (const PatternPair &p : all_pattern_pairs(n, config.particle_budget)) {
            for (const Occupation &j : dominated_vectors(p.input)) items.emplace_back(p, j);
        }
        return parallel_map_with_cache(a, items.size(), threads, [&](PatternCache &c, std::size_t k) {
            return check_classical_convolution(c, items[k].first, items[k].second, options);
        });
    }
    if (name == "two-particle") {
        if (n < 2 || config.particle_budget < 2) return {};
        const auto pairs = mode_pairs(n);
        return parallel_map_with_cache(a, pairs.size() * pairs.size(), threads, [&](PatternCache &c, std::size_t k) {
            return check_two_particle(c, pairs[k / pairs.size()], pairs[k % pairs.size()], options);
        });
    }
    if (name == "three-particle") {
        if (n < 3 || config.particle_budget < 3) return {};
        const auto triples = mode_triples(n);
        return parallel_map_with_cache(a, triples.size() * triples.size(), threads,
                                       [&](PatternCache &c, std::size_t k) {
                                           return check_three_particle(c, triples[k / triples.size()],
                                                                       triples[k % triples.size()], options);
                                       });
    }
    if (name == "sum-difference") {
        const int upto = std::min({static_cast<int>(n), 4, config.particle_budget});
        if (upto < 1) return {};
        return check_sum_difference_system(u, upto, options);
    }
    // single-mode-bunching
    std::vector<IdentityReport> out;
    for (int count = 1; count <= config.particle_budget; ++count) {
        for (std::size_t m = 0; m < n; ++m) out.push_back(check_single_mode_bunching(u, count, m, options));
    }
    return out;
}

int cmd_compute(const ScenarioConfig &config, const std::string &in_text, const std::string &out_text,
                std::ostream &out, std::ostream &err) {
    const UnitaryMatrix u = load_unitary(config);
    const Occupation in = parse_pattern(in_text, "--in");
    const Occupation outp = parse_pattern(out_text, "--out");
    require_length(in, u.size(), "--in");
    require_length(outp, u.size(), "--out");
    const PatternPair pattern{in, outp};
    Budget budget;
    budget.max_particles = config.particle_budget;
    require_within(budget, pattern);
    if (!in.is_binary() || !outp.is_binary()) {
        err << "warning: --in/--out has a mode with more than one particle; the fermionic probability is 0\n";
    }
    const TransitionTriple t = transition_triple(u, pattern);
    const DisplayProbability b = display_probability(t.boson);
    const DisplayProbability f = display_probability(t.fermion);
    const DisplayProbability c = display_probability(t.classical);
    std::optional<Naturalness> label;
    if (is_two_particle_binary(pattern)) label = classify_ordering(t.boson, t.classical, t.fermion);
    const bool anomaly = b.anomaly || f.anomaly || c.anomaly;
    if (anomaly) err << "warning: probability outside [0, 1] beyond rounding slack\n";

    if (config.format == OutputFormat::Csv) {
        out << "input,output,B,F,C,S,D,label\n";
        out << csv_pattern(in) << "," << csv_pattern(outp) << "," << format_number(b.value) << ","
            << format_number(f.value) << "," << format_number(c.value) << "," << format_number(t.boson + t.fermion)
            << "," << format_number(t.boson - t.fermion) << "," << (label ? to_string(*label) : "-") << "\n";
    } else {
        JsonObject j;
        j.add("N", u.size()).add("input", in.to_string()).add("output", outp.to_string());
        j.add("B", b.value).add("F", f.value).add("C", c.value);
        j.add("S", t.boson + t.fermion).add("D", t.boson - t.fermion);
        if (label) j.add("label", to_string(*label));
        if (anomaly) j.add("numeric_anomaly", true);
        out << j.str() << "\n";
    }
    return exit_code::kOk;
}

int cmd_verify(const ScenarioConfig &config, const std::string &suite, std::ostream &out, std::ostream &err) {
    const std::vector<std::string> names = expand_suite(suite);
    const UnitaryMatrix u = load_unitary(config);
    if (config.format == OutputFormat::Csv) out << "identity,N,input,output,residual,passed\n";
    std::size_t total = 0, failed = 0;
    for (const std::string &name : names) {
        for (const IdentityReport &r : run_suite(name, u, config)) {
            out << render_report(r, config.format) << "\n";
            ++total;
            if (!r.passed) ++failed;
        }
    }
    err << "verify: " << total << " checks, " << failed << " failed\n";
    return failed == 0 ? exit_code::kOk : exit_code::kIdentityFailure;
}

int cmd_scan(const ScenarioConfig &config, int particles, std::ostream &out) {
    const UnitaryMatrix u = load_unitary(config);
    const std::size_t n = u.size();
    if (particles < 1 || static_cast<std::size_t>(particles) > n) {
        throw Error(ErrorKind::InvalidArgument, "--particles must be between 1 and the mode count");
    }
    Budget budget;
    budget.max_particles = config.particle_budget;
    if (n > budget.max_modes || particles > budget.max_particles) {
        throw Error(ErrorKind::BudgetExceeded, "--particles " + std::to_string(particles) + " on " +
                                                   std::to_string(n) + " modes exceeds the budget");
    }
    std::vector<Occupation> patterns;
    for (const Subset &s : enumerate_subsets(n, static_cast<std::size_t>(particles))) {
        patterns.push_back(Occupation::from_modes(n, s.indices));
    }
    // Lexicographic order of the occupation vectors, largest first like enumerate_occupations.
    std::sort(patterns.begin(), patterns.end(), std::greater<>());
    const std::size_t count = patterns.size() * patterns.size();
    const std::vector<TransitionTriple> triples =
        parallel_map_with_cache(u.matrix(), count, config.threads, [&](PatternCache &c, std::size_t k) {
            const Occupation &in = patterns[k / patterns.size()];
            const Occupation &o = patterns[k % patterns.size()];
            return TransitionTriple{c.boson(in, o), c.fermion(in, o), c.classical(in, o)};
        });
    if (config.format == OutputFormat::Csv) out << "in,out,B,F,C,S,D,label\n";
    for (std::size_t k = 0; k < count; ++k) {
        const Occupation &in = patterns[k / patterns.size()];
        const Occupation &o = patterns[k % patterns.size()];
        const TransitionTriple &t = triples[k];
        const std::string label =
            particles == 2 ? std::string(to_string(classify_ordering(t.boson, t.classical, t.fermion))) : "-";
        if (config.format == OutputFormat::Csv) {
            out << csv_pattern(in) << "," << csv_pattern(o) << "," << format_number(t.boson) << ","
                << format_number(t.fermion) << "," << format_number(t.classical) << ","
                << format_number(t.boson + t.fermion) << "," << format_number(t.boson - t.fermion) << "," << label
                << "\n";
        } else {
            JsonObject j;
            j.add("in", in.to_string()).add("out", o.to_string());
            j.add("B", t.boson).add("F", t.fermion).add("C", t.classical);
            j.add("S", t.boson + t.fermion).add("D", t.boson - t.fermion).add("label", label);
            out << j.str() << "\n";
        }
    }
    return exit_code::kOk;
}

int cmd_gf(const ScenarioConfig &config, const std::string &x_text, const std::string &z_text, int cutoff,
           std::ostream &out) {
    const UnitaryMatrix u = load_unitary(config);
    DualVariables duals{parse_reals(x_text, "--x"), parse_reals(z_text, "--z")};
    try {
        validate_duals(duals, u.size());
    } catch (const Error &e) {
        throw Error(ErrorKind::InvalidArgument, std::string("--x/--z: ") + e.what());
    }
    const double closed = gf_closed_form(u, duals);
    const double minor = gf_minor_expansion(u, duals);
    const SeriesValue series = gf_truncated_series(u, duals, cutoff);
    JsonObject j;
    j.add("N", u.size()).add("x", duals.x).add("z", duals.z);
    j.add("closed_form", closed).add("minor_expansion", minor).add("truncated_series", series.value);
    j.add("cutoff", cutoff).add("series_terms", series.terms);
    j.add("tail_bound", series.tail_bound).add("tail_bound_advisory", true);
    j.add("delta_closed_minor", std::abs(closed - minor));
    j.add("delta_closed_series", std::abs(closed - series.value));
    j.add("delta_minor_series", std::abs(minor - series.value));
    out << j.str() << "\n";
    return exit_code::kOk;
}

int cmd_embed(const ScenarioConfig &config, const std::string &in_text, const std::string &out_text,
              std::ostream &out) {
    const ComplexMatrix a = load_matrix(config);
    if (a.rows() != a.cols()) throw Error(ErrorKind::NotSquare, "--matrix: embedding needs a square matrix");
    const Occupation in = parse_pattern(in_text, "--in");
    const Occupation outp = parse_pattern(out_text, "--out");
    require_length(in, static_cast<std::size_t>(a.rows()), "--in");
    require_length(outp, static_cast<std::size_t>(a.rows()), "--out");
    CheckOptions options;
    options.tolerance = config.tolerance;
    options.budget = budget_of(config);
    const Theorem2CrossCheck check = cross_check_theorem2(a, {in, outp}, options);
    JsonObject j;
    j.add("N", static_cast<std::size_t>(a.rows())).add("L", check.dilation_size).add("epsilon", check.epsilon);
    j.add("input", in.to_string()).add("output", outp.to_string());
    j.add("direct_residual", check.direct.residual);
    j.add("dilated_residual", check.dilated.residual);
    j.add("direct_passed", check.direct.passed).add("dilated_passed", check.dilated.passed);
    j.add("consistent", check.consistent);
    out << j.str() << "\n";
    return check.direct.passed && check.dilated.passed ? exit_code::kOk : exit_code::kIdentityFailure;
}

int cmd_distribution(const ScenarioConfig &config, const std::string &in_text, const std::string &stats,
                     std::ostream &out) {
    const UnitaryMatrix u = load_unitary(config);
    const Occupation in = parse_pattern(in_text, "--in");
    require_length(in, u.size(), "--in");
    Statistics statistics;
    try {
        statistics = parse_statistics(stats);
    } catch (const Error &e) {
        throw Error(ErrorKind::InvalidArgument, std::string("--stats: ") + e.what());
    }
    Budget budget;
    budget.max_particles = config.particle_budget;
    const Distribution dist = output_distribution(u, in, statistics, budget);
    out << "output_pattern,probability\n";
    for (const auto &[pattern, p] : dist) out << csv_pattern(pattern) << "," << format_number(p) << "\n";
    return exit_code::kOk;
}

int resolve_threads(int requested) {
    if (const char *env = std::getenv("INTERFERE_THREADS")) {
        const std::string_view text(env);
        if (text == "auto") return omp_get_num_procs();
        int value = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec == std::errc() && ptr == text.data() + text.size() && value > 0) return value;
    }
    return requested > 0 ? requested : omp_get_num_procs();
}

}  // namespace

std::string format_number(double value) {
    if (value == 0.0) return "0";
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.15g", value);
    return buffer;
}

ComplexMatrix resolve_matrix_source(std::string_view source, std::uint64_t default_seed) {
    auto after = [&](std::string_view prefix) -> std::optional<std::string_view> {
        if (source.substr(0, prefix.size()) == prefix) return source.substr(prefix.size());
        return std::nullopt;
    };
    auto size_and_seed = [&](std::string_view rest) {
        const std::size_t colon = rest.find(':');
        const std::uint64_t size = parse_u64(rest.substr(0, colon), "size");
        const std::uint64_t seed = colon == std::string_view::npos ? default_seed : parse_u64(rest.substr(colon + 1), "seed");
        if (size == 0) throw Error(ErrorKind::InvalidArgument, "--matrix: size must be positive");
        return std::pair{static_cast<std::size_t>(size), seed};
    };

    if (source == "beamsplitter") return balanced_beamsplitter().matrix();
    if (auto rest = after("file:")) return load_matrix_json(std::string(*rest));
    if (auto rest = after("fourier:")) return fourier_matrix(parse_u64(*rest, "size")).matrix();
    if (auto rest = after("identity:")) return identity_unitary(parse_u64(*rest, "size")).matrix();
    if (auto rest = after("haar:")) {
        const auto [n, seed] = size_and_seed(*rest);
        return haar_random_unitary(n, seed).matrix();
    }
    if (auto rest = after("disk:")) {
        const auto [n, seed] = size_and_seed(*rest);
        return random_disk_matrix(n, seed);
    }
    if (auto rest = after("permutation:")) {
        std::vector<std::size_t> images;
        std::stringstream ss{std::string(*rest)};
        std::string token;
        while (std::getline(ss, token, ',')) {
            const std::uint64_t v = parse_u64(token, "permutation entry");
            if (v == 0) throw Error(ErrorKind::InvalidArgument, "--matrix: permutation entries are 1-based");
            images.push_back(static_cast<std::size_t>(v - 1));
        }
        return permutation_unitary(images).matrix();
    }
    throw Error(ErrorKind::InvalidArgument, "--matrix: unknown source '" + std::string(source) + "'");
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Bosonic, fermionic and classical transition probabilities and their identities", "interfere"};
    app.require_subcommand(1);

    ScenarioConfig config;
    std::string format = "json";
    std::string threads = "auto";
    auto add_common = [&](CLI::App *sub, int default_budget) {
        config.particle_budget = default_budget;
        sub->add_option("--matrix", config.matrix_source, "Matrix source")->required();
        sub->add_option("--budget", config.particle_budget, "Maximum particle number");
        sub->add_option("--tolerance", config.tolerance, "Identity residual tolerance");
        sub->add_option("--unitary-tolerance", config.unitary_tolerance, "Unitarity check tolerance");
        sub->add_option("--seed", config.seed, "Seed for haar:N / disk:N without an explicit seed");
        sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--threads", threads, "Worker threads or 'auto'");
    };

    std::string in_text, out_text, suite, x_text, z_text, stats = "boson";
    int particles = 2;
    int cutoff = 10;

    CLI::App *compute = app.add_subcommand("compute", "B, F and C for one input/output pattern");
    add_common(compute, 8);
    compute->add_option("--in", in_text, "Input occupation, e.g. 1,1")->required();
    compute->add_option("--out", out_text, "Output occupation")->required();

    CLI::App *verify = app.add_subcommand("verify", "Run identity checks over every pattern within budget");
    add_common(verify, 4);
    verify->add_option("--suite", suite, "Comma-separated identity names or 'all'")->required();

    CLI::App *scan = app.add_subcommand("scan", "All one-per-mode patterns with B, F, C, S, D and naturalness");
    add_common(scan, 8);
    scan->add_option("--particles", particles, "Particles per pattern");

    CLI::App *gf = app.add_subcommand("gf", "Generating function three ways");
    add_common(gf, 8);
    gf->add_option("--x", x_text, "Input duals, comma-separated")->required();
    gf->add_option("--z", z_text, "Output duals, comma-separated")->required();
    gf->add_option("--cutoff", cutoff, "Series particle cutoff");

    CLI::App *embed = app.add_subcommand("embed", "Matrix identity directly and through a unitary dilation");
    add_common(embed, 8);
    embed->add_option("--in", in_text, "Input occupation")->required();
    embed->add_option("--out", out_text, "Output occupation")->required();

    CLI::App *dist = app.add_subcommand("distribution", "Output distribution for one input as CSV");
    add_common(dist, 8);
    dist->add_option("--in", in_text, "Input occupation")->required();
    dist->add_option("--stats", stats, "boson, fermion or classical");

    CLI::App *matrix = app.add_subcommand("matrix", "Write the selected matrix as JSON");
    add_common(matrix, 8);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::kOk : exit_code::kInputError;
    }
    CLI::App *active = app.get_subcommands().front();
    if (active->count("--budget") == 0) config.particle_budget = (active == verify) ? 4 : 8;
    config.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
    try {
        config.threads = resolve_threads(threads == "auto" ? 0 : std::stoi(threads));
    } catch (const std::exception &) {
        err << "error: --threads: expected a positive integer or 'auto'\n";
        return exit_code::kInputError;
    }
    omp_set_num_threads(config.threads);

    try {
        if (active == compute) return cmd_compute(config, in_text, out_text, out, err);
        if (active == verify) return cmd_verify(config, suite, out, err);
        if (active == scan) return cmd_scan(config, particles, out);
        if (active == gf) return cmd_gf(config, x_text, z_text, cutoff, out);
        if (active == embed) return cmd_embed(config, in_text, out_text, out);
        if (active == dist) return cmd_distribution(config, in_text, stats, out);
        out << matrix_to_json(load_matrix(config)) << "\n";
        return exit_code::kOk;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return e.is_budget_error() ? exit_code::kBudgetError : exit_code::kInputError;
    }
}

}  // namespace interfere::cli
