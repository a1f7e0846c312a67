/* Copyright 2026 The wdk Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

// wdk: constants of Weitzenboeck derivations on free metabelian Lie algebras.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 closed form unavailable, 4 invariant generators unavailable.

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wdk/constants.hpp"
#include "wdk/corpus.hpp"
#include "wdk/io.hpp"
#include "wdk/omega.hpp"

namespace {

using namespace wdk;
using io::json;

constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kClosedFormFailed = 3;
constexpr int kNoInvariants = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string partition;
    int max_degree = -1;
    std::string space = "lie";
    bool bigraded = false;
    bool closed_form = false;
    bool truncate = false;
    bool json_out = false;
    bool lift = false;
    bool compute_invariants = false;
    std::string example;
    std::string corpus_dir;
    std::string out;
    std::string poly;
    int arity = -1;
};

Partition partition_of(const Config &cfg) {
    if (cfg.partition.empty())
        throw UsageError("--partition is required");
    try {
        return Partition::parse(cfg.partition);
    } catch (const InvalidPartition &e) {
        throw UsageError(e.what());
    }
}

std::size_t degree_bound(const Config &cfg, const Partition &p, int minimum) {
    if (cfg.max_degree == -1)
        return corpus::default_max_degree(p.arity());
    if (cfg.max_degree < minimum)
        throw UsageError("--max-degree must be at least " + std::to_string(minimum));
    return static_cast<std::size_t>(cfg.max_degree);
}

Space space_of(const Config &cfg) {
    const auto s = parse_space(cfg.space);
    if (!s)
        throw UsageError("--space must be poly, commutator or lie");
    return *s;
}

void print_json(const json &j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// hilbert

NiceRational source_series(Space space, std::size_t d) {
    switch (space) {
    case Space::polynomial:
        return hilbert_polynomial_ring(d);
    case Space::commutator:
        return hilbert_free_metabelian(d, true);
    case Space::whole_lie:
        break;
    }
    return hilbert_free_metabelian(d);
}

/// Ascending rendering "1 + 2*z + ... + O(z^(n+1))".
std::string series_text(const Polynomial &p, std::size_t n, std::span<const std::string> names) {
    std::string out;
    for (const auto &[m, c] : p.terms()) {
        const Rational a = c.sign() < 0 ? -c : c;
        if (!out.empty())
            out += c.sign() < 0 ? " - " : " + ";
        else if (c.sign() < 0)
            out += "-";
        if (m.is_one())
            out += a.to_string();
        else
            out += (a.is_one() ? "" : a.to_string() + "*") + m.to_string(names);
    }
    return (out.empty() ? std::string("0") : out) + " + O(z^" + std::to_string(n + 1) + ")";
}

int cmd_hilbert(const Config &cfg) {
    const Partition partition = partition_of(cfg);
    const std::size_t n = degree_bound(cfg, partition, 1);
    const Space space = space_of(cfg);
    const NiceRational h = gl2_substitute(source_series(space, partition.arity()), partition);

    const Polynomial bigraded = multiplicity_series_truncated(h, n).terms();
    const Polynomial graded = specialize_t(bigraded);
    const std::vector<std::string> z_name = {"z"};

    std::optional<ClosedForm> closed;
    std::string failure;
    if (cfg.closed_form) {
        try {
            closed = multiplicity_series_closed_with_method(h);
        } catch (const OmegaFailure &e) {
            failure = e.what();
        }
        if (!closed && !cfg.truncate) {
            std::cerr << "wdk: closed form unavailable: " << failure << "\n";
            return kClosedFormFailed;
        }
    }
    std::optional<std::string> graded_closed;
    if (closed) {
        try {
            graded_closed = specialize_t(closed->value).reduced().to_string(z_name);
        } catch (const std::exception &) {
            // A factor without z collapses at t1 = t2 = 1; only the bigraded form is shown.
        }
    }

    if (cfg.json_out) {
        json out = {{"partition", partition.cells()},
                    {"space", to_string(space)},
                    {"max_degree", n},
                    {"graded", io::graded_series_json(graded)}};
        if (cfg.bigraded)
            out["bigraded"] = io::bigraded_series_json(bigraded);
        if (cfg.closed_form) {
            if (closed) {
                out["closed_form"] = {
                    {"bigraded", closed->value.to_string(series_names())},
                    {"method", closed->method == ClosedFormMethod::elliott ? "elliott" : "reconstruction"}};
                if (graded_closed)
                    out["closed_form"]["graded"] = *graded_closed;
            } else {
                out["truncated_at"] = n;
                out["closed_form_failure"] = failure;
            }
        }
        print_json(out);
        return 0;
    }

    std::cout << "partition " << partition.to_string() << ", d = " << partition.arity() << ", space "
              << to_string(space) << "\n";
    std::cout << "graded: " << series_text(graded, n, z_name) << "\n";
    if (cfg.closed_form) {
        if (closed) {
            if (graded_closed)
                std::cout << "graded closed form: " << *graded_closed << "\n";
            std::cout << "bigraded closed form: " << closed->value.to_string(series_names()) << "\n";
        } else {
            std::cout << "closed form unavailable (" << failure << "); truncated at " << n << "\n";
        }
    }
    if (cfg.bigraded) {
        std::cout << std::setw(6) << "degree" << std::setw(12) << "bidegree" << std::setw(14) << "multiplicity"
                  << "\n";
        for (const auto &[m, c] : bigraded.terms())
            std::cout << std::setw(6) << m[kZ] << std::setw(12) << Bidegree{m[kT1], m[kT2]}.to_string()
                      << std::setw(14) << c.to_string() << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// kernel-dims

int cmd_kernel_dims(const Config &cfg) {
    const Partition partition = partition_of(cfg);
    const std::size_t n = degree_bound(cfg, partition, 1);
    const Space space = space_of(cfg);
    const Derivation delta(partition);
    const auto dims = kernel_dimensions(delta, space, n);
    std::optional<BigradedDimensions> bi;
    if (cfg.bigraded)
        bi = bigraded_kernel_dimensions(delta, space, n);

    if (cfg.json_out) {
        json out = {{"partition", partition.cells()}, {"space", to_string(space)}, {"max_degree", n},
                    {"dimensions", dims}};
        if (bi) {
            json list = json::array();
            for (const auto &[k, v] : *bi)
                list.push_back({{"degree", k.first}, {"bidegree", {k.second.first, k.second.second}}, {"dimension", v}});
            out["bigraded"] = std::move(list);
        }
        print_json(out);
        return 0;
    }
    std::cout << "partition " << partition.to_string() << ", d = " << partition.arity() << ", space "
              << to_string(space) << "\n";
    if (bi) {
        std::cout << std::setw(6) << "degree" << std::setw(12) << "bidegree" << std::setw(11) << "dimension" << "\n";
        for (const auto &[k, v] : *bi)
            std::cout << std::setw(6) << k.first << std::setw(12) << k.second.to_string() << std::setw(11) << v
                      << "\n";
        return 0;
    }
    std::cout << std::setw(6) << "degree" << std::setw(11) << "dimension" << "\n";
    for (std::size_t i = 0; i < dims.size(); ++i)
        std::cout << std::setw(6) << i + 1 << std::setw(11) << dims[i] << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// generators

struct Invariants {
    std::vector<Polynomial> list;
    bool builtin = true;
};

std::optional<Invariants> invariants_for(const Derivation &delta, const Config &cfg, std::size_t n) {
    if (auto b = builtin_invariants(delta.partition()))
        return Invariants{std::move(*b), true};
    if (!cfg.compute_invariants)
        return std::nullopt;
    return Invariants{invariant_generators(delta, n), false};
}

void print_generators(const GeneratorSet &gens, const std::vector<Relation> &rels) {
    std::cout << "algebra generators:\n";
    for (std::size_t j = 0; j < gens.algebra.size(); ++j)
        std::cout << "  f" << j + 1 << " = " << gens.algebra[j].to_string() << "\n";
    std::cout << "module generators:\n";
    for (std::size_t j = 0; j < gens.module.size(); ++j) {
        const auto &c = gens.module[j];
        std::cout << "  c" << j + 1 << " " << c.bidegree.to_string() << " = " << c.element.to_string() << "\n";
    }
    if (!rels.empty()) {
        std::cout << "relations:\n";
        for (std::size_t j = 0; j < rels.size(); ++j)
            std::cout << "  R" << j + 1 << " " << rels[j].bidegree.to_string() << ": " << rels[j].to_string()
                      << " = 0\n";
    }
}

int cmd_generators(const Config &cfg) {
    const Partition partition = partition_of(cfg);
    const std::size_t n = degree_bound(cfg, partition, 2);
    const Derivation delta(partition);

    GeneratorSet gens{partition, {}, {}};
    std::vector<Relation> rels;
    bool builtin = true;
    if (cfg.lift) {
        if (!partition.has_trailing_trivial_cell() || partition.cell_count() < 2)
            throw UsageError("--lift needs a trailing 1x1 cell, e.g. --partition 2,0");
        const Derivation lower(partition.without_last_cell());
        const auto inv = invariants_for(lower, cfg, n);
        if (!inv) {
            std::cerr << "wdk: no built-in invariant generators for " << lower.partition().to_string()
                      << "; pass --compute-invariants\n";
            return kNoInvariants;
        }
        builtin = inv->builtin;
        gens = lift_generators(delta, module_generators(lower, inv->list, n).generators);
    } else {
        const auto inv = invariants_for(delta, cfg, n);
        if (!inv) {
            std::cerr << "wdk: no built-in invariant generators for " << partition.to_string()
                      << "; pass --compute-invariants\n";
            return kNoInvariants;
        }
        builtin = inv->builtin;
        auto found = module_generators(delta, inv->list, n);
        gens = std::move(found.generators);
        rels = std::move(found.relations);
    }
    const bool generates = check_generation(delta, gens, n).generates();

    if (cfg.json_out) {
        json out = io::to_json(gens, rels);
        out["max_degree"] = n;
        out["invariants"] = builtin ? "builtin" : "computed";
        out["lifted"] = cfg.lift;
        out["generates_to_max_degree"] = generates;
        print_json(out);
        return 0;
    }
    std::cout << "partition " << partition.to_string() << ", d = " << partition.arity() << ", degrees <= " << n
              << (cfg.lift ? ", lifted" : "") << "\n";
    if (!builtin)
        std::cout << "invariant generators computed, complete to degree " << n << "\n";
    print_generators(gens, rels);
    std::cout << "span equals kernel to degree " << n << ": " << (generates ? "yes" : "no") << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// verify, pi, corpus

int cmd_verify(const Config &cfg) {
    const std::filesystem::path dir = cfg.corpus_dir.empty() ? corpus::default_dir() : std::filesystem::path(cfg.corpus_dir);
    corpus::Report report;
    try {
        report = corpus::verify_example(cfg.example, dir);
    } catch (const corpus::UnknownExample &e) {
        throw UsageError(e.what());
    } catch (const std::runtime_error &e) {
        std::cerr << "wdk: " << e.what() << "\n";
        return kVerifyFailed;
    }
    if (cfg.json_out)
        print_json(report.to_json());
    else {
        for (const auto &c : report.checks) {
            std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
            if (!c.detail.empty())
                std::cout << " (" << c.detail << ")";
            std::cout << "\n";
        }
        std::cout << "example " << report.id << ": " << (report.passed() ? "pass" : "fail") << "\n";
    }
    if (const auto *f = report.first_failure()) {
        std::cerr << "wdk: first failing check: " << f->name << "\n";
        return kVerifyFailed;
    }
    return 0;
}

int cmd_pi(const Config &cfg) {
    std::size_t d = 0;
    if (cfg.arity > 0)
        d = static_cast<std::size_t>(cfg.arity);
    else if (!cfg.partition.empty())
        d = partition_of(cfg).arity();
    else
        throw UsageError("pi needs --arity or --partition");
    if (d < 2)
        throw UsageError("pi needs a target arity of at least 2");
    if (cfg.poly.empty())
        throw UsageError("--poly is required");
    Polynomial p;
    try {
        p = Polynomial::parse(cfg.poly, d - 1, default_names(d - 1));
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    if (!p.coefficient(Monomial(d - 1)).is_zero())
        throw UsageError("pi is defined on polynomials without constant term");
    const LieElement image = lie_from_wreath(pi_map(p, d));
    if (cfg.json_out) {
        json out = io::to_json(image);
        out["text"] = image.to_string();
        out["arity"] = d;
        print_json(out);
    } else {
        std::cout << image.to_string() << "\n";
    }
    return 0;
}

int cmd_corpus_rebuild(const Config &cfg) {
    const std::filesystem::path dir = cfg.out.empty() ? corpus::default_dir() : std::filesystem::path(cfg.out);
    corpus::rebuild(dir);
    for (const auto &id : corpus::example_ids())
        std::cout << (dir / (id + ".json")).string() << "\n";
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Constants of Weitzenboeck derivations on free metabelian Lie algebras"};
    app.require_subcommand(1);
    Config cfg;

    const auto add_partition = [&](CLI::App *sub, bool required) {
        auto *opt = sub->add_option("--partition", cfg.partition, "Jordan cell sizes minus one, e.g. 2,0");
        if (required)
            opt->required();
    };
    const auto add_degree = [&](CLI::App *sub) {
        sub->add_option("--max-degree", cfg.max_degree, "Degree bound N (default 8 for d <= 5, else 6)");
    };

    auto *hilbert = app.add_subcommand("hilbert", "Hilbert series of the constants");
    add_partition(hilbert, true);
    add_degree(hilbert);
    hilbert->add_option("--space", cfg.space, "poly, commutator or lie");
    hilbert->add_flag("--bigraded", cfg.bigraded, "Also print the (t1, t2, z) multiplicities");
    hilbert->add_flag("--closed-form", cfg.closed_form, "Compute the rational closed form");
    hilbert->add_flag("--truncate", cfg.truncate, "Fall back to the truncated series if no closed form");
    hilbert->add_flag("--json", cfg.json_out, "JSON output");

    auto *kdims = app.add_subcommand("kernel-dims", "Dimensions of the kernel by degree");
    add_partition(kdims, true);
    add_degree(kdims);
    kdims->add_option("--space", cfg.space, "poly, commutator or lie");
    kdims->add_flag("--bigraded", cfg.bigraded, "Split by bidegree");
    kdims->add_flag("--json", cfg.json_out, "JSON output");

    auto *gens = app.add_subcommand("generators", "Module generators and relations");
    add_partition(gens, true);
    add_degree(gens);
    gens->add_flag("--lift", cfg.lift, "Lift from the partition without its trailing 1x1 cell");
    gens->add_flag("--compute-invariants", cfg.compute_invariants, "Compute invariant generators to the degree bound");
    gens->add_flag("--json", cfg.json_out, "JSON output");

    auto *verify = app.add_subcommand("verify", "Check a corpus example");
    verify->add_option("--example", cfg.example, "Corpus id: 3.4, 4.5, 5.1, 5.2, 5.3, 5.4")->required();
    verify->add_option("--corpus", cfg.corpus_dir, "Corpus directory");
    verify->add_flag("--json", cfg.json_out, "JSON report");

    auto *pi = app.add_subcommand("pi", "Image of a polynomial under pi");
    pi->add_option("--poly", cfg.poly, "Polynomial in x1..x(d-1)")->required();
    pi->add_option("--arity", cfg.arity, "Target number of variables d");
    add_partition(pi, false);
    pi->add_flag("--json", cfg.json_out, "JSON output");

    auto *corpus_cmd = app.add_subcommand("corpus", "Corpus maintenance");
    corpus_cmd->require_subcommand(1);
    auto *rebuild = corpus_cmd->add_subcommand("rebuild", "Regenerate the corpus files");
    rebuild->add_option("--out", cfg.out, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*hilbert)
            return cmd_hilbert(cfg);
        if (*kdims)
            return cmd_kernel_dims(cfg);
        if (*gens)
            return cmd_generators(cfg);
        if (*verify)
            return cmd_verify(cfg);
        if (*pi)
            return cmd_pi(cfg);
        if (*rebuild)
            return cmd_corpus_rebuild(cfg);
    } catch (const UsageError &e) {
        std::cerr << "wdk: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception &e) {
        std::cerr << "wdk: error: " << e.what() << "\n";
        return kVerifyFailed;
    }
    return kUsage;
}
