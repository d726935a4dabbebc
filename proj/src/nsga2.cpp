#include "iotdef/nsga2.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace iotdef {

bool dominates(const FitnessTriple& a, const FitnessTriple& b) {
    if (a.dnf < b.dnf || a.nip < b.nip || a.rcf < b.rcf) return false;
    return a.dnf > b.dnf || a.nip > b.nip || a.rcf > b.rcf;
}

std::vector<std::vector<int>> fast_nondominated_sort(
    const std::vector<FitnessTriple>& points) {
    const int n = static_cast<int>(points.size());
    std::vector<std::vector<int>> dominated(n);
    std::vector<int> dominators(n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (dominates(points[i], points[j])) {
                dominated[i].push_back(j);
                ++dominators[j];
            }
        }
    }
    std::vector<std::vector<int>> fronts;
    std::vector<int> current;
    for (int i = 0; i < n; ++i)
        if (dominators[i] == 0) current.push_back(i);
    while (!current.empty()) {
        fronts.push_back(current);
        std::vector<int> next;
        for (int i : current)
            for (int j : dominated[i])
                if (--dominators[j] == 0) next.push_back(j);
        std::sort(next.begin(), next.end());
        current = std::move(next);
    }
    return fronts;
}

std::vector<double> crowding_distance(const std::vector<FitnessTriple>& front) {
    const int n = static_cast<int>(front.size());
    std::vector<double> dist(n, 0.0);
    if (n == 0) return dist;
    const double inf = std::numeric_limits<double>::infinity();

    // Duplicate triples carry no spread of their own: the distance is
    // computed over the distinct triples and later occurrences stay at 0.
    std::vector<int> reps;
    std::vector<int> rep_of(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int r : reps)
            if (front[r] == front[i]) {
                rep_of[i] = -2;
                break;
            }
        if (rep_of[i] == -1) {
            rep_of[i] = i;
            reps.push_back(i);
        }
    }
    const int m_distinct = static_cast<int>(reps.size());

    auto objective = [](const FitnessTriple& f, int m) {
        return m == 0 ? f.dnf : m == 1 ? f.nip : f.rcf;
    };
    for (int m = 0; m < 3; ++m) {
        std::vector<int> idx = reps;
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
            const double va = objective(front[a], m);
            const double vb = objective(front[b], m);
            return va != vb ? va < vb : a < b;
        });
        dist[idx[0]] = inf;
        dist[idx[m_distinct - 1]] = inf;
        const double lo = objective(front[idx[0]], m);
        const double hi = objective(front[idx[m_distinct - 1]], m);
        const double range = hi - lo;
        if (range <= 0.0) continue;
        for (int k = 1; k + 1 < m_distinct; ++k) {
            // Every member attaining an objective's extreme value is a
            // boundary member, ties included.
            if (objective(front[idx[k]], m) == lo ||
                objective(front[idx[k]], m) == hi) {
                dist[idx[k]] = inf;
                continue;
            }
            if (std::isinf(dist[idx[k]])) continue;
            dist[idx[k]] += (objective(front[idx[k + 1]], m) -
                             objective(front[idx[k - 1]], m)) /
                            range;
        }
    }
    return dist;
}

bool ParetoFront::contains(const DeploymentVector& dv) const {
    for (const auto& m : members)
        for (const auto& d : m.deployments)
            if (d == dv) return true;
    return false;
}

double ParetoFront::max_dnf() const {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& m : members) best = std::max(best, m.fitness.dnf);
    return best;
}

double ParetoFront::max_nip() const {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& m : members) best = std::max(best, m.fitness.nip);
    return best;
}

double ParetoFront::max_rcf() const {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& m : members) best = std::max(best, m.fitness.rcf);
    return best;
}

OptimizationProblem deployment_problem(const IoTNetwork& net,
                                       const DeploymentSpace& space) {
    // The returned problem references net and space; the caller keeps both
    // alive for the optimizer run.
    OptimizationProblem p;
    p.width = space.width();
    p.decode_repair = [sp = &space](const std::string& genome, Rng& rng) {
        return sp->repair(sp->decode(genome), rng);
    };
    p.fitness = [np = &net](const DeploymentVector& dv) {
        return evaluate(*np, dv);
    };
    return p;
}

namespace {

// Rank and crowding over the whole population, fronts returned for the
// survival step.
std::vector<std::vector<int>> assign_ranks(std::vector<Individual>& pop) {
    std::vector<FitnessTriple> triples(pop.size());
    for (std::size_t i = 0; i < pop.size(); ++i) triples[i] = pop[i].fitness;
    auto fronts = fast_nondominated_sort(triples);
    for (std::size_t fi = 0; fi < fronts.size(); ++fi) {
        std::vector<FitnessTriple> front_triples;
        front_triples.reserve(fronts[fi].size());
        for (int i : fronts[fi]) front_triples.push_back(triples[i]);
        const auto dist = crowding_distance(front_triples);
        for (std::size_t k = 0; k < fronts[fi].size(); ++k) {
            pop[fronts[fi][k]].rank = static_cast<int>(fi);
            pop[fronts[fi][k]].crowding = dist[k];
        }
    }
    return fronts;
}

// Binary tournament by crowded comparison; the first draw wins full ties.
int tournament(const std::vector<Individual>& pop, Rng& rng) {
    const int i = static_cast<int>(rng.below(pop.size()));
    const int j = static_cast<int>(rng.below(pop.size()));
    if (pop[j].rank < pop[i].rank) return j;
    if (pop[j].rank == pop[i].rank && pop[j].crowding > pop[i].crowding)
        return j;
    return i;
}

// Pure fitness calls may fan out over workers; every result lands in its own
// slot, so the outcome is identical for any worker count.
void compute_fitness(const OptimizationProblem& problem,
                     std::vector<Individual>& batch, int jobs) {
    if (jobs <= 1 || batch.size() < 2) {
        for (auto& ind : batch) ind.fitness = problem.fitness(ind.dv);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= batch.size()) return;
            batch[i].fitness = problem.fitness(batch[i].dv);
        }
    };
    std::vector<std::thread> threads;
    const int count = std::min<int>(jobs, static_cast<int>(batch.size()));
    threads.reserve(count);
    for (int t = 0; t < count; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
}

ParetoFront front_of_rank0(const std::vector<Individual>& pop) {
    std::map<std::tuple<double, double, double>, ParetoMember> by_triple;
    for (const auto& ind : pop) {
        if (ind.rank != 0) continue;
        auto& member =
            by_triple[{-ind.fitness.dnf, -ind.fitness.nip, -ind.fitness.rcf}];
        member.fitness = ind.fitness;
        if (std::find(member.deployments.begin(), member.deployments.end(),
                      ind.dv) == member.deployments.end())
            member.deployments.push_back(ind.dv);
    }
    ParetoFront front;
    front.members.reserve(by_triple.size());
    for (auto& [key, member] : by_triple)
        front.members.push_back(std::move(member));
    return front;
}

GenerationStats stats_of(int generation, const std::vector<Individual>& pop) {
    GenerationStats s;
    s.generation = generation;
    s.best_dnf = -std::numeric_limits<double>::infinity();
    s.best_nip = s.best_dnf;
    s.best_rcf = s.best_dnf;
    for (const auto& ind : pop) {
        if (ind.rank == 0) ++s.front_size;
        s.best_dnf = std::max(s.best_dnf, ind.fitness.dnf);
        s.best_nip = std::max(s.best_nip, ind.fitness.nip);
        s.best_rcf = std::max(s.best_rcf, ind.fitness.rcf);
    }
    return s;
}

}  // namespace

GAResult nsga2(const OptimizationProblem& problem, const GAParams& params,
               const GenerationLogger& log) {
    if (problem.width <= 0)
        throw std::invalid_argument("genome width must be positive");
    if (params.population_size < 2)
        throw std::invalid_argument("population size must be at least 2");
    if (params.crossover_rate < 0.0 || params.crossover_rate > 1.0 ||
        params.mutation_rate < 0.0 || params.mutation_rate > 1.0)
        throw std::invalid_argument("rates must lie in [0,1]");
    if (params.max_generations < 0)
        throw std::invalid_argument("max generations must be nonnegative");

    Rng rng(params.seed);
    const int n = params.population_size;
    const int width = problem.width;
    GAResult result;

    std::vector<Individual> pop(n);
    for (auto& ind : pop) {
        ind.genome.resize(width);
        for (int b = 0; b < width; ++b) ind.genome[b] = rng.bit() ? '1' : '0';
        ind.dv = problem.decode_repair(ind.genome, rng);
    }
    compute_fitness(problem, pop, params.jobs);
    result.evaluations += static_cast<std::uint64_t>(n);
    assign_ranks(pop);
    if (log) log(stats_of(0, pop));

    auto mutate = [&](std::string& genome) {
        if (rng.chance(params.mutation_rate)) {
            const int b = static_cast<int>(rng.below(width));
            genome[b] = genome[b] == '0' ? '1' : '0';
        }
    };

    for (int gen = 1; gen <= params.max_generations; ++gen) {
        // All stochastic decisions happen here, in one fixed serial order.
        std::vector<Individual> offspring;
        offspring.reserve(n);
        while (static_cast<int>(offspring.size()) < n) {
            const int p1 = tournament(pop, rng);
            const int p2 = tournament(pop, rng);
            std::string c1 = pop[p1].genome;
            std::string c2 = pop[p2].genome;
            if (width >= 2 && rng.chance(params.crossover_rate)) {
                const int cut = 1 + static_cast<int>(rng.below(width - 1));
                for (int b = cut; b < width; ++b) std::swap(c1[b], c2[b]);
            }
            mutate(c1);
            mutate(c2);
            Individual o1;
            o1.genome = std::move(c1);
            o1.dv = problem.decode_repair(o1.genome, rng);
            offspring.push_back(std::move(o1));
            if (static_cast<int>(offspring.size()) < n) {
                Individual o2;
                o2.genome = std::move(c2);
                o2.dv = problem.decode_repair(o2.genome, rng);
                offspring.push_back(std::move(o2));
            }
        }
        compute_fitness(problem, offspring, params.jobs);
        result.evaluations += static_cast<std::uint64_t>(offspring.size());

        // Elitist survival: parents and offspring compete; fronts fill the
        // next population in rank order, the straddling front by descending
        // crowding.
        std::vector<Individual> combined = std::move(pop);
        combined.insert(combined.end(),
                        std::make_move_iterator(offspring.begin()),
                        std::make_move_iterator(offspring.end()));
        const auto fronts = assign_ranks(combined);

        std::vector<Individual> next;
        next.reserve(n);
        for (const auto& front : fronts) {
            if (static_cast<int>(next.size() + front.size()) <= n) {
                for (int i : front) next.push_back(combined[i]);
            } else {
                std::vector<int> order = front;
                std::sort(order.begin(), order.end(), [&](int a, int b) {
                    if (combined[a].crowding != combined[b].crowding)
                        return combined[a].crowding > combined[b].crowding;
                    return a < b;
                });
                for (int i : order) {
                    if (static_cast<int>(next.size()) == n) break;
                    next.push_back(combined[i]);
                }
            }
            if (static_cast<int>(next.size()) == n) break;
        }
        pop = std::move(next);
        if (log) log(stats_of(gen, pop));
    }

    result.front = front_of_rank0(pop);
    result.population = std::move(pop);
    return result;
}

EsaResult exhaustive_search(const IoTNetwork& net, const DeploymentSpace& space,
                            std::uint64_t limit) {
    const std::uint64_t n = space.valid_count();
    if (n > limit)
        throw std::length_error("valid deployment space of " +
                                std::to_string(n) + " exceeds the limit of " +
                                std::to_string(limit));

    // Points sharing (dnf, nip) can only survive at the highest rcf, which
    // shrinks the pairwise nondomination check to one candidate per bucket.
    struct Bucket {
        FitnessTriple fitness;
        std::vector<DeploymentVector> deployments;
    };
    std::map<std::pair<double, double>, Bucket> buckets;

    EsaResult result;
    space.for_each_valid([&](const DeploymentVector& dv) {
        ++result.evaluations;
        const FitnessTriple fit = evaluate(net, dv);
        auto [it, inserted] =
            buckets.try_emplace({fit.dnf, fit.nip}, Bucket{fit, {}});
        Bucket& bucket = it->second;
        if (inserted || fit.rcf > bucket.fitness.rcf) {
            bucket.fitness = fit;
            bucket.deployments.assign(1, dv);
        } else if (fit.rcf == bucket.fitness.rcf) {
            bucket.deployments.push_back(dv);
        }
    });

    std::vector<const Bucket*> candidates;
    candidates.reserve(buckets.size());
    for (const auto& [key, bucket] : buckets) candidates.push_back(&bucket);

    for (const Bucket* c : candidates) {
        bool dominated = false;
        for (const Bucket* other : candidates) {
            if (other != c && dominates(other->fitness, c->fitness)) {
                dominated = true;
                break;
            }
        }
        if (!dominated)
            result.front.members.push_back({c->fitness, c->deployments});
    }
    std::sort(result.front.members.begin(), result.front.members.end(),
              [](const ParetoMember& a, const ParetoMember& b) {
                  return std::tie(b.fitness.dnf, b.fitness.nip, b.fitness.rcf) <
                         std::tie(a.fitness.dnf, a.fitness.nip, a.fitness.rcf);
              });
    return result;
}

AccuracyReport accuracy_ratio(const std::vector<Individual>& ga_population,
                              const ParetoFront& esa_front) {
    if (esa_front.members.empty())
        throw std::invalid_argument("empty exhaustive frontier");
    constexpr double eps = 1e-12;

    auto objective = [](const FitnessTriple& f, int m) {
        return m == 0 ? f.dnf : m == 1 ? f.nip : f.rcf;
    };

    double ratios[3];
    for (int m = 0; m < 3; ++m) {
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& member : esa_front.members)
            best = std::max(best, objective(member.fitness, m));

        std::set<std::string> frontier_attaining;
        for (const auto& member : esa_front.members)
            if (objective(member.fitness, m) >= best - eps)
                for (const auto& dv : member.deployments)
                    frontier_attaining.insert(dv.to_string());

        std::set<std::string> ga_attaining;
        for (const auto& ind : ga_population)
            if (objective(ind.fitness, m) >= best - eps)
                ga_attaining.insert(ind.dv.to_string());

        ratios[m] = static_cast<double>(ga_attaining.size()) /
                    static_cast<double>(frontier_attaining.size());
    }

    AccuracyReport report;
    report.ratio_dnf = ratios[0];
    report.ratio_nip = ratios[1];
    report.ratio_rcf = ratios[2];
    report.headline =
        std::clamp(std::min({ratios[0], ratios[1], ratios[2]}), 0.0, 1.0);
    return report;
}

}  // namespace iotdef
