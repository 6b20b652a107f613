#include "fresco/miner.hpp"

#include <algorithm>
#include <condition_variable>
#include <deque>
#include <functional>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "fresco/canonizer.hpp"
#include "fresco/lattice.hpp"
#include "fresco/matcher.hpp"

namespace fresco {

void MiningConfig::validate() const {
    if (tau < 1) throw std::invalid_argument("tau must be at least 1");
    if (max_size < 1 || max_size > 10)
        throw std::invalid_argument("max-size must be between 1 and 10");
    if (budget && budget->count() < 0) throw std::invalid_argument("timeout must be >= 0");
}

namespace {

// Minimal work pool: tasks may submit further tasks; wait_idle() returns once
// every submitted task has finished.
class WorkPool {
public:
    explicit WorkPool(unsigned workers) {
        for (unsigned i = 0; i < workers; ++i)
            threads_.emplace_back([this] { loop(); });
    }
    ~WorkPool() {
        {
            std::lock_guard<std::mutex> lock(mu_);
            stop_ = true;
        }
        cv_.notify_all();
        for (auto& t : threads_) t.join();
    }

    void submit(std::function<void()> task) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            queue_.push_back(std::move(task));
            ++pending_;
        }
        cv_.notify_one();
    }

    void wait_idle() {
        std::unique_lock<std::mutex> lock(mu_);
        idle_cv_.wait(lock, [this] { return pending_ == 0; });
    }

private:
    void loop() {
        while (true) {
            std::function<void()> task;
            {
                std::unique_lock<std::mutex> lock(mu_);
                cv_.wait(lock, [this] { return stop_ || !queue_.empty(); });
                if (stop_ && queue_.empty()) return;
                task = std::move(queue_.front());
                queue_.pop_front();
            }
            task();
            {
                std::lock_guard<std::mutex> lock(mu_);
                if (--pending_ == 0) idle_cv_.notify_all();
            }
        }
    }

    std::mutex mu_;
    std::condition_variable cv_, idle_cv_;
    std::deque<std::function<void()>> queue_;
    std::size_t pending_ = 0;
    bool stop_ = false;
    std::vector<std::thread> threads_;
};

struct MineNode {
    std::shared_ptr<const Simplet> simplet;
    ImageSets images;
    NonCandidates nc;
};

struct MineRun {
    const ComplexStore& store;
    const MiningConfig& cfg;
    Registry registry;
    WorkPool pool;

    std::mutex mu;
    std::vector<ResultRow> rows;
    std::vector<LineageEdge> lineage;
    std::vector<LevelStats> levels;
    std::uint64_t duplicates = 0;
    std::uint64_t output_canonizations = 0;

    MineRun(const ComplexStore& s, const MiningConfig& c, unsigned workers)
        : store(s), cfg(c), pool(workers) {}

    LevelStats& level_for(std::uint32_t size) {
        for (auto& l : levels)
            if (l.size == size) return l;
        levels.push_back({size, 0, 0, 0.0});
        std::sort(levels.begin(), levels.end(),
                  [](const LevelStats& a, const LevelStats& b) { return a.size < b.size; });
        return level_for(size);
    }

    void expand(const std::shared_ptr<MineNode>& node) {
        const std::uint32_t n = node->simplet->num_vertices();
        // The size gate covers both rules; --inflate-at-cap additionally lets
        // capped simplets close joists (expand_all never widens at the cap).
        if (n >= cfg.max_size && !(cfg.inflate_at_cap && n == cfg.max_size)) return;
        ExpansionBatch batch = expand_all(node->simplet, registry, cfg.max_size);
        {
            std::lock_guard<std::mutex> lock(mu);
            std::size_t widens = node->simplet->num_vertices() < cfg.max_size
                                     ? node->simplet->num_vertices()
                                     : 0;
            std::size_t generated = widens + find_joists(*node->simplet).size();
            duplicates += generated - batch.children.size();
        }
        for (const auto& expansion : batch.children) {
            auto child = expansion.child;
            pool.submit([this, node, child] { examine(node, child); });
        }
    }

    void examine(const std::shared_ptr<MineNode>& parent,
                 const std::shared_ptr<const Simplet>& child) {
        ParentContext ctx{&parent->images, &parent->nc};
        auto t0 = std::chrono::steady_clock::now();
        ExamineOutcome outcome =
            cfg.mode == MiningMode::Decision
                ? examine_decision(store, *child, ctx, cfg.tau, cfg.budget)
                : examine_exact(store, *child, ctx, cfg.tau);
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();

        {
            std::lock_guard<std::mutex> lock(mu);
            LevelStats& level = level_for(child->num_vertices());
            ++level.examined;
            level.millis += ms;
            if (outcome.frequent) ++level.frequent;
            if (cfg.record_lineage) {
                LineageEdge edge;
                edge.parent = serialize_canonical(*parent->simplet);
                edge.child = serialize_canonical(*child);
                edge.child_frequent = outcome.frequent;
                if (cfg.mode == MiningMode::Exact) {
                    edge.parent_support = min_image_count(parent->images);
                    if (outcome.frequent) edge.child_support = outcome.support;
                }
                lineage.push_back(std::move(edge));
            }
        }
        if (!outcome.frequent) return;

        if (child->dimension() >= static_cast<int>(cfg.min_dim)) {
            CanonicalForm form = canonical_form(*child);
            ResultRow row;
            row.canon_hex = canonical_hex(form);
            row.simplet = serialize_canonical(*child);
            row.size = child->num_vertices();
            row.dim = static_cast<std::uint32_t>(child->dimension());
            if (cfg.mode == MiningMode::Exact) row.support = outcome.support;
            std::lock_guard<std::mutex> lock(mu);
            rows.push_back(std::move(row));
            ++output_canonizations;
        }

        auto node = std::make_shared<MineNode>(
            MineNode{child, std::move(outcome.images), std::move(outcome.nc)});
        expand(node);
    }
};

}  // namespace

MiningResult mine(const ComplexStore& store, const MiningConfig& config) {
    config.validate();
    auto t0 = std::chrono::steady_clock::now();

    MiningResult result;
    result.config = config;

    unsigned workers = config.workers ? config.workers : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;

    MineRun run(store, config, workers);

    auto root = Simplet::single_vertex();
    run.registry.register_simplet(root);

    if (store.num_vertices() > 0 && config.tau <= store.num_vertices()) {
        // Root occurrences are exactly the vertices, so its image set is the
        // whole vertex set and its non-candidate set is empty.
        auto root_node = std::make_shared<MineNode>(MineNode{
            root, ImageSets{VertexSet(store.num_vertices(), true)},
            NonCandidates{VertexSet(store.num_vertices())}});
        run.pool.submit([&run, root_node] { run.expand(root_node); });
        run.pool.wait_idle();

        if (config.min_dim == 0) {  // the frequent root itself passes the filter
            CanonicalForm form = canonical_form(*root);
            ResultRow row{canonical_hex(form), serialize_canonical(*root), 1, 0, std::nullopt};
            if (config.mode == MiningMode::Exact) row.support = store.num_vertices();
            run.rows.push_back(std::move(row));
            ++run.output_canonizations;
        }
    }

    result.rows = std::move(run.rows);
    std::sort(result.rows.begin(), result.rows.end(), [](const ResultRow& a, const ResultRow& b) {
        if (a.dim != b.dim) return a.dim > b.dim;
        std::size_t sa = a.support.value_or(0), sb = b.support.value_or(0);
        if (sa != sb) return sa > sb;
        return a.canon_hex < b.canon_hex;
    });
    result.lineage = std::move(run.lineage);

    for (const auto& simplet : run.registry.all())
        result.registered_classes.push_back(serialize_canonical(*simplet));
    std::sort(result.registered_classes.begin(), result.registered_classes.end());

    MiningStats& stats = result.stats;
    stats.levels = std::move(run.levels);
    for (const auto& level : stats.levels) {
        stats.examined += level.examined;
        stats.frequent += level.frequent;
    }
    stats.pruned = stats.examined - stats.frequent;
    stats.registered_classes = run.registry.size();
    stats.duplicate_children = run.duplicates;
    // Registry canonizations plus one per emitted row and per class listing.
    stats.canonization_calls = run.registry.canonization_calls() + run.output_canonizations +
                               result.registered_classes.size();
    stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

void write_tsv(const MiningResult& result, std::ostream& out) {
    out << "canon_hex\tsimplet\tsize\tdim\tsupport\n";
    for (const auto& row : result.rows) {
        out << row.canon_hex << '\t' << row.simplet << '\t' << row.size << '\t' << row.dim
            << '\t';
        if (row.support)
            out << *row.support;
        else
            out << ">=" << result.config.tau;
        out << '\n';
    }
}

}  // namespace fresco
