#include "extlab/bowtie.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

namespace extlab
{
    std::string to_string(EdgeClass c)
    {
        switch (c) {
            case EdgeClass::faithful: return "faithful";
            case EdgeClass::unfaithful: return "unfaithful";
            case EdgeClass::co_faithful: return "co_faithful";
        }
        return "?";
    }

    namespace
    {
        /// idx -> s * idx + t on every h, q, h', q' index. For s = +-1 this is an
        /// automorphism of the whole bow-tie graph that fixes J and J' setwise.
        struct Sym
        {
            int s = 1;
            int t = 0;

            Sym inverse() const { return {s, -s * t}; }
            /// this after other
            Sym after(const Sym &other) const { return {s * other.s, s * other.t + t}; }
        };

        class JModel
        {
        public:
            explicit JModel(int n_) : n(n_), b(n_), g(bowtie(6, n_)) {}

            int n;
            BowtieLayout b;
            Graph g;

            Vertex h(int i) const { return b.h(i); }
            Vertex q(int j) const { return b.q(j); }
            bool is_h(Vertex v) const { return b.name(v).kind == BowtieKind::h; }
            bool is_q(Vertex v) const { return b.name(v).kind == BowtieKind::q; }
            int idx(Vertex v) const { return b.name(v).index; }

            Vertex map(const Sym &s, Vertex v) const
            {
                auto name = b.name(v);
                name.index = s.s * name.index + s.t;
                return b.at(name);
            }
            Edge map(const Sym &s, const Edge &e) const { return Edge(map(s, e.u), map(s, e.v)); }
            std::vector<Edge> map(const Sym &s, const std::vector<Edge> &es) const
            {
                std::vector<Edge> out;
                for (auto &e : es)
                    out.push_back(map(s, e));
                return out;
            }
            std::vector<Edge> mirror(const std::vector<Edge> &es) const
            {
                std::vector<Edge> out;
                for (auto &e : es)
                    out.push_back(b.mirror(e));
                return out;
            }

            bool in_gj(const Edge &e) const { return b.in_j(e.u) && b.in_j(e.v) && g.has_edge(e.u, e.v); }
            bool in_gq(const Edge &e) const { return is_q(e.u) && is_q(e.v) && g.has_edge(e.u, e.v); }
            bool in_gh(const Edge &e) const { return is_h(e.u) && is_h(e.v) && g.has_edge(e.u, e.v); }
            bool is_spoke(const Edge &e) const { return in_gj(e) && is_h(e.u) != is_h(e.v); }

            /// h end and q end of a spoke
            std::pair<Vertex, Vertex> spoke_ends(const Edge &e) const
            {
                return is_h(e.u) ? std::pair{e.u, e.v} : std::pair{e.v, e.u};
            }

            std::vector<char> blank() const { return std::vector<char>(static_cast<std::size_t>(g.order()), 0); }

            std::string describe(const std::vector<Edge> &es) const
            {
                std::ostringstream out;
                out << "n=" << n << " {";
                for (std::size_t i = 0; i < es.size(); ++i)
                    out << (i ? ", " : "") << to_string(b.name(es[i].u)) << "-" << to_string(b.name(es[i].v));
                out << "}";
                return out.str();
            }
        };

        void require_odd_n(int n)
        {
            if (n < 5 || n % 2 == 0)
                throw std::invalid_argument("the bow-tie constructions need odd n >= 5");
        }

        void require_matching_in_gj(const JModel &J, const std::vector<Edge> &m)
        {
            auto used = J.blank();
            for (auto &e : m) {
                if (e.u < 0 || e.v >= J.g.order() || ! J.in_gj(e))
                    throw std::invalid_argument("edge is not an edge of G[J]");
                if (used[e.u] || used[e.v])
                    throw std::invalid_argument("edges do not form a matching");
                used[e.u] = used[e.v] = 1;
            }
        }

        /// Maximal runs of unblocked vertices along a cycle given by at(1..len), in
        /// cyclic order starting just after the first blocked position.
        std::vector<std::vector<Vertex>> cycle_runs(int len, const std::function<Vertex(int)> &at, const std::vector<char> &blocked)
        {
            int start = 0;
            for (int p = 1; p <= len && ! start; ++p)
                if (blocked[at(p)])
                    start = p;
            std::vector<std::vector<Vertex>> runs;
            if (! start) {
                runs.emplace_back();
                for (int p = 1; p <= len; ++p)
                    runs.back().push_back(at(p));
                return runs;
            }
            std::vector<Vertex> current;
            for (int step = 1; step <= len; ++step) {
                Vertex v = at(wrap_index(start + step, len));
                if (blocked[v]) {
                    if (! current.empty())
                        runs.push_back(std::move(current));
                    current.clear();
                }
                else
                    current.push_back(v);
            }
            return runs;
        }

        void pair_along(const std::vector<Vertex> &path, std::size_t from, std::size_t to, std::vector<Edge> &out)
        {
            for (std::size_t i = from; i + 1 < to; i += 2)
                out.emplace_back(path[i], path[i + 1]);
        }

        struct Completion
        {
            std::vector<Edge> pairs;
            std::optional<Vertex> left_out;
        };

        /// Pairs off the paths of G[H] - blocked and G[Q] - blocked. Every H path must be
        /// even; with allow_odd one Q path may be odd, and its left-out vertex is the first
        /// odd position (counting from 1 along the run) that is not in `avoid`.
        std::optional<Completion> complete_paths(const JModel &J, const std::vector<char> &blocked, bool allow_odd, const std::vector<Vertex> &avoid = {})
        {
            Completion c;
            for (auto &run : cycle_runs(J.n, [&](int i) { return J.h(i); }, blocked)) {
                if (run.size() % 2)
                    return std::nullopt;
                pair_along(run, 0, run.size(), c.pairs);
            }
            for (auto &run : cycle_runs(2 * J.n, [&](int j) { return J.q(j); }, blocked)) {
                if (run.size() % 2 == 0) {
                    pair_along(run, 0, run.size(), c.pairs);
                    continue;
                }
                if (! allow_odd || c.left_out)
                    return std::nullopt;
                std::size_t pick = run.size();
                for (std::size_t p = 0; p < run.size(); p += 2)
                    if (std::find(avoid.begin(), avoid.end(), run[p]) == avoid.end()) {
                        pick = p;
                        break;
                    }
                if (pick == run.size())
                    return std::nullopt;
                c.left_out = run[pick];
                pair_along(run, 0, pick, c.pairs);
                pair_along(run, pick + 1, run.size(), c.pairs);
            }
            return c;
        }

        void block(std::vector<char> &blocked, const std::vector<Edge> &es)
        {
            for (auto &e : es)
                blocked[e.u] = blocked[e.v] = 1;
        }

        std::vector<Edge> concat(std::vector<Edge> a, const std::vector<Edge> &b)
        {
            a.insert(a.end(), b.begin(), b.end());
            return a;
        }

        std::vector<Edge> without(std::vector<Edge> a, const Edge &e)
        {
            a.erase(std::remove(a.begin(), a.end(), e), a.end());
            return a;
        }

        bool covers(const std::vector<Edge> &m, Vertex v)
        {
            return std::any_of(m.begin(), m.end(), [v](const Edge &e) { return e.touches(v); });
        }

        /// Bounded search for a matching of G[J] - blocked that covers every free h.
        std::optional<std::vector<Edge>> cover_h_search(const JModel &J, std::vector<char> used)
        {
            std::vector<Edge> chosen;
            long budget = 1'000'000;
            std::function<bool()> rec = [&]() -> bool {
                if (--budget < 0)
                    return false;
                int i = 1;
                while (i <= J.n && used[J.h(i)])
                    ++i;
                if (i > J.n)
                    return true;
                Vertex h = J.h(i);
                for (Vertex w : {J.h(i + 1), J.h(i - 1), J.q(i), J.q(i + J.n)}) {
                    if (used[w])
                        continue;
                    used[h] = used[w] = 1;
                    chosen.emplace_back(h, w);
                    if (rec())
                        return true;
                    chosen.pop_back();
                    used[h] = used[w] = 0;
                }
                return false;
            };
            if (rec())
                return chosen;
            return std::nullopt;
        }

        /// Each odd run of G[H] - V(m) gets one spoke at an odd position; the rest pair up.
        std::optional<std::vector<Edge>> cover_h_direct(const JModel &J, std::vector<char> used)
        {
            std::vector<Edge> out;
            auto runs = cycle_runs(J.n, [&](int i) { return J.h(i); }, used);
            for (auto &run : runs) {
                if (run.size() % 2 == 0) {
                    pair_along(run, 0, run.size(), out);
                    continue;
                }
                bool placed = false;
                for (std::size_t p = 0; p < run.size() && ! placed; p += 2) {
                    int i = J.idx(run[p]);
                    for (Vertex q : {J.q(i), J.q(i + J.n)})
                        if (! used[q]) {
                            used[q] = 1;
                            out.emplace_back(run[p], q);
                            pair_along(run, 0, p, out);
                            pair_along(run, p + 1, run.size(), out);
                            placed = true;
                            break;
                        }
                }
                if (! placed)
                    return std::nullopt;
            }
            return out;
        }

        void check_covers_h(const JModel &J, const std::vector<Edge> &m, const std::string &context)
        {
            for (int i = 1; i <= J.n; ++i)
                if (! covers(m, J.h(i)))
                    throw TheoremRefutationAlarm(context + ": h" + std::to_string(i) + " left uncovered");
        }

        LemmaOutput lemma1_impl(const JModel &J, const std::vector<Edge> &m, const std::vector<Vertex> &extra_blocked = {})
        {
            auto used = J.blank();
            block(used, m);
            for (Vertex v : extra_blocked)
                used[v] = 1;
            if (auto direct = cover_h_direct(J, used))
                return {concat(m, *direct), "direct"};
            if (auto found = cover_h_search(J, used))
                return {concat(m, *found), "search"};
            throw TheoremRefutationAlarm("lemma 1 search exhausted for " + J.describe(m));
        }
    }

    BowtieClassification classify_bowtie_edges(int n, const std::vector<Edge> &m0)
    {
        if (n < 3)
            throw std::invalid_argument("bow-tie needs n >= 3");
        BowtieLayout b(n);
        auto g = bowtie(6, n);
        BowtieClassification out;
        std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
        for (auto &raw : m0) {
            Edge e(raw.u, raw.v);
            if (e.u < 0 || e.v >= g.order() || ! g.has_edge(e.u, e.v))
                throw std::invalid_argument("edge is not an edge of the bow-tie graph");
            if (used[e.u] || used[e.v])
                throw std::invalid_argument("edges do not form a matching");
            used[e.u] = used[e.v] = 1;
            bool ju = b.in_j(e.u), jv = b.in_j(e.v);
            if (ju && jv) {
                ++out.x;
                out.tags.push_back(EdgeClass::faithful);
            }
            else if (! ju && ! jv) {
                ++out.z;
                out.tags.push_back(EdgeClass::co_faithful);
            }
            else {
                ++out.y;
                out.tags.push_back(EdgeClass::unfaithful);
            }
        }
        return out;
    }

    LemmaOutput lemma1_cover_h(int n, const std::vector<Edge> &m)
    {
        require_odd_n(n);
        JModel J(n);
        require_matching_in_gj(J, m);
        auto out = lemma1_impl(J, m);
        out.branch = "lemma1/" + out.branch;
        check_covers_h(J, out.edges, "lemma 1");
        return out;
    }

    LemmaOutput lemma2_matching(int n, const std::vector<Edge> &m0)
    {
        require_odd_n(n);
        JModel J(n);
        auto cls = classify_bowtie_edges(n, m0);
        if (cls.z != 0 || m0.size() != 3)
            throw std::invalid_argument("lemma 2 needs a 3-matching without co-faithful edges");

        std::vector<Edge> faithful;
        std::vector<Vertex> unfaithful; // the Q ends of the rungs
        for (std::size_t i = 0; i < m0.size(); ++i) {
            Edge e(m0[i].u, m0[i].v);
            if (cls.tags[i] == EdgeClass::faithful)
                faithful.push_back(e);
            else
                unfaithful.push_back(J.b.in_j(e.u) ? e.u : e.v);
        }
        std::sort(unfaithful.begin(), unfaithful.end(), [&](Vertex a, Vertex b) { return J.idx(a) < J.idx(b); });

        LemmaOutput out;
        const int f = static_cast<int>(faithful.size());
        if (f == 3) {
            out = lemma1_impl(J, faithful);
            out.branch = "f3/" + out.branch;
        }
        else if (f == 2) {
            int j = J.idx(unfaithful[0]);
            Vertex qj = J.q(j), left = J.q(j - 1), right = J.q(j + 1);
            if (! covers(faithful, left)) {
                Edge aux(left, qj);
                out = lemma1_impl(J, concat(faithful, {aux}));
                out.edges = without(out.edges, aux);
                out.branch = "f2/left/" + out.branch;
            }
            else if (! covers(faithful, right)) {
                Edge aux(qj, right);
                out = lemma1_impl(J, concat(faithful, {aux}));
                out.edges = without(out.edges, aux);
                out.branch = "f2/right/" + out.branch;
            }
            else if (Edge aux(J.h(j), J.q(j + n)); ! covers(faithful, aux.u) && ! covers(faithful, aux.v)) {
                // every G[J]-neighbour of q_j is now matched, so q_j stays free
                out = lemma1_impl(J, concat(faithful, {aux}));
                out.branch = "f2/spoke/" + out.branch;
            }
            else {
                out = lemma1_impl(J, faithful, {qj});
                out.branch = "f2/fallback/" + out.branch;
            }
        }
        else if (f == 1) {
            int j = J.idx(unfaithful[0]), k = J.idx(unfaithful[1]);
            Edge e1 = faithful[0];
            int gap = ((k - j) % (2 * n) + 2 * n) % (2 * n);
            if (gap != 1 && gap != 2 * n - 1) {
                std::optional<std::pair<Vertex, Vertex>> pick;
                for (Vertex u : {J.q(j - 1), J.q(j + 1)})
                    for (Vertex w : {J.q(k - 1), J.q(k + 1)})
                        if (! pick && u != w && ! e1.touches(u) && ! e1.touches(w))
                            pick = std::pair{u, w};
                if (! pick)
                    throw TheoremRefutationAlarm("lemma 2 (f=1): no auxiliary neighbours for " + J.describe(m0));
                Edge a1(pick->first, J.q(j)), a2(pick->second, J.q(k));
                out = lemma1_impl(J, {e1, a1, a2});
                out.edges = without(without(out.edges, a1), a2);
                out.branch = "f1/apart/" + out.branch;
            }
            else {
                Edge aux(J.q(j), J.q(k));
                out = lemma1_impl(J, {e1, aux});
                out.edges = without(out.edges, aux);
                out.branch = "f1/adjacent/" + out.branch;
            }
        }
        else {
            int j = 1;
            while (std::find(unfaithful.begin(), unfaithful.end(), J.q(j)) != unfaithful.end())
                ++j;
            out.edges.emplace_back(J.h(j), J.q(j));
            for (int step = 1; step < n; step += 2)
                out.edges.emplace_back(J.h(j + step), J.h(j + step + 1));
            out.branch = "f0";
        }

        check_covers_h(J, out.edges, "lemma 2 " + J.describe(m0));
        for (auto &e : faithful)
            if (std::find(out.edges.begin(), out.edges.end(), e) == out.edges.end())
                throw TheoremRefutationAlarm("lemma 2 dropped a faithful edge for " + J.describe(m0));
        for (Vertex v : unfaithful)
            if (covers(out.edges, v))
                throw TheoremRefutationAlarm("lemma 2 covers an unfaithful vertex for " + J.describe(m0));
        std::sort(out.edges.begin(), out.edges.end());
        return out;
    }

    namespace
    {
        LemmaOutput lemma3_impl(const JModel &J, const Edge &e, Vertex q_k)
        {
            const int n = J.n;
            Sym norm;
            std::vector<Edge> seed;
            std::string branch;

            auto k_after = [&] { return wrap_index(J.idx(J.map(norm, q_k)), 2 * n); };

            if (J.in_gh(e)) {
                // e = h_i h_{i+1} goes to h_0 h_1
                int a = J.idx(e.u), c = J.idx(e.v);
                int i = (wrap_index(a + 1, n) == c) ? a : c;
                i %= n; // h_n is h_0; keep the shift in [0, n) so q parities follow the table
                norm = {1, -i};
                bool odd = k_after() % 2 == 1;
                seed = odd ? std::vector<Edge>{{J.h(2), J.q(2)}} : std::vector<Edge>{{J.h(2), J.q(n + 2)}};
                branch = odd ? "case1/odd" : "case1/even";
            }
            else if (J.is_spoke(e)) {
                auto [h, q] = J.spoke_ends(e);
                norm = {1, 1 - J.idx(q)};
                bool odd = k_after() % 2 == 1;
                if (odd)
                    seed = {{J.h(0), J.q(0)}, {J.h(2), J.q(2)}};
                branch = odd ? "case2/odd" : "case2/even";
            }
            else {
                int a = J.idx(e.u), c = J.idx(e.v);
                int j = (wrap_index(a + 1, 2 * n) == c) ? a : c;
                norm = {1, -j};
                bool odd = k_after() % 2 == 1;
                seed = odd ? std::vector<Edge>{{J.h(2), J.q(2)}} : std::vector<Edge>{{J.h(n - 1), J.q(2 * n - 1)}};
                branch = odd ? "case3/odd" : "case3/even";
            }

            seed = J.map(norm.inverse(), seed);
            auto blocked = J.blank();
            block(blocked, {e});
            blocked[q_k] = 1;
            for (auto &s : seed)
                if (blocked[s.u] || blocked[s.v])
                    throw TheoremRefutationAlarm("lemma 3 seed collides for " + J.describe({e}) + " q" + std::to_string(J.idx(q_k)));
            block(blocked, seed);
            auto done = complete_paths(J, blocked, false);
            if (! done)
                throw TheoremRefutationAlarm("lemma 3 leaves an odd path for " + J.describe({e}) + " q" + std::to_string(J.idx(q_k)));
            auto edges = concat(seed, done->pairs);
            std::sort(edges.begin(), edges.end());
            return {edges, "lemma3/" + branch};
        }

        LemmaOutput lemma4_impl(const JModel &J, const Edge &e0, const std::vector<Edge> &m2, Vertex *uncovered)
        {
            const int n = J.n;
            auto kind = [&](const Edge &e) { return J.in_gh(e) ? 0 : J.is_spoke(e) ? 1 : 2; };
            Edge e1 = m2[0], e2 = m2[1];
            if (kind(e1) > kind(e2) || (kind(e1) == kind(e2) && e2 < e1))
                std::swap(e1, e2);

            Sym norm;
            std::vector<Edge> seed; // in normalised coordinates unless noted
            std::string branch;
            bool seed_is_raw = false;

            auto blocked_by_m2 = [&] {
                auto blocked = J.blank();
                block(blocked, m2);
                return blocked;
            };

            const int k1 = kind(e1), k2 = kind(e2);
            if (k1 == 0 && k2 == 0) {
                // two H paths of different parities; hang a spoke off an end of the odd one
                for (auto &run : cycle_runs(n, [&](int i) { return J.h(i); }, blocked_by_m2()))
                    if (run.size() % 2 == 1 && seed.empty())
                        seed = {{run.front(), J.q(J.idx(run.front()))}};
                seed_is_raw = true;
                branch = "case1";
            }
            else if (k1 == 0 && k2 == 1) {
                int a = J.idx(e1.u), c = J.idx(e1.v);
                int i = (wrap_index(a + 1, n) == c) ? a : c;
                i %= n;
                norm = {1, -i};
                auto [h, q] = J.spoke_ends(J.map(norm, e2));
                int j = wrap_index(J.idx(q), 2 * n);
                int lo = (j >= 2 && j <= n - 1) ? 2 : n + 2;
                int hi = (lo == 2) ? n - 1 : 2 * n - 1;
                for (int x = lo; x <= hi; ++x)
                    if (x != j)
                        seed.emplace_back(J.h(x), J.q(x));
                branch = lo == 2 ? "case2/low" : "case2/high";
            }
            else if (k1 == 0 && k2 == 2) {
                int a = J.idx(e2.u), c = J.idx(e2.v);
                int j = (wrap_index(a + 1, 2 * n) == c) ? a : c;
                norm = {1, -j};
                Edge h_edge = J.map(norm, e1);
                int ha = J.idx(h_edge.u), hc = J.idx(h_edge.v);
                int i = ((wrap_index(ha + 1, n) == hc) ? ha : hc) % n;
                if (i > (n - 1) / 2) {
                    // the reflection q_x -> q_{1-x} fixes q_0 q_1 and sends i to n - i
                    norm = Sym{-1, 1}.after(norm);
                    i = n - i;
                }
                Edge f0 = J.map(norm, e0);
                if (i == 1 && f0.touches(J.q(2))) {
                    seed = {{J.h(3), J.q(n + 3)}};
                    branch = "case3/shifted";
                }
                else {
                    seed = {{J.h(i + 2), J.q(i + 2)}};
                    branch = "case3";
                }
            }
            else if (k1 == 1 && k2 == 1) {
                auto [h, q] = J.spoke_ends(e1);
                norm = {1, 1 - J.idx(q)};
                auto [h2, q2] = J.spoke_ends(J.map(norm, e2));
                int k = wrap_index(J.idx(q2), 2 * n);
                int lo = (k >= 2 && k <= n) ? 2 : n + 2;
                int hi = (lo == 2) ? n : 2 * n;
                for (int x = lo; x <= hi; ++x)
                    if (x != k)
                        seed.emplace_back(J.h(x), J.q(x));
                branch = lo == 2 ? "case4/low" : "case4/high";
            }
            else if (k1 == 1 && k2 == 2) {
                int a = J.idx(e2.u), c = J.idx(e2.v);
                int j2 = (wrap_index(a + 1, 2 * n) == c) ? a : c;
                norm = {1, -j2};
                auto [h, q] = J.spoke_ends(J.map(norm, e1));
                int j = wrap_index(J.idx(q), 2 * n);
                if (j > n) {
                    norm = Sym{-1, 1}.after(norm);
                    j = wrap_index(1 - j, 2 * n);
                }
                Edge f0 = J.map(norm, e0);
                if (j == 3 && f0.touches(J.q(2))) {
                    seed = {{J.h(2), J.q(2)}, {J.h(4), J.q(4)}};
                    branch = "case5/pair";
                }
                else
                    branch = "case5";
            }
            else {
                auto runs = cycle_runs(2 * n, [&](int j) { return J.q(j); }, blocked_by_m2());
                const std::vector<Vertex> *target = nullptr;
                for (auto &run : runs)
                    if (run.size() == 1)
                        target = &run;
                if (target)
                    branch = "case6/isolated";
                else {
                    for (auto &run : runs)
                        if (! target || run.size() > target->size())
                            target = &run;
                    branch = "case6";
                }
                Vertex qk = target->front();
                seed = {{J.h(J.idx(qk)), qk}};
                seed_is_raw = true;
            }

            if (! seed_is_raw)
                seed = J.map(norm.inverse(), seed);

            auto blocked = blocked_by_m2();
            for (auto &s : seed)
                if (blocked[s.u] || blocked[s.v])
                    throw TheoremRefutationAlarm("lemma 4 " + branch + " seed collides for " + J.describe(m2) + " e0=" + J.describe({e0}));
            block(blocked, seed);
            auto done = complete_paths(J, blocked, true, {e0.u, e0.v});
            if (! done || ! done->left_out)
                throw TheoremRefutationAlarm("lemma 4 " + branch + " fails its path conditions for " + J.describe(m2) + " e0=" + J.describe({e0}));
            if (uncovered)
                *uncovered = *done->left_out;
            auto edges = concat(concat(m2, seed), done->pairs);
            std::sort(edges.begin(), edges.end());
            return {edges, "lemma4/" + branch};
        }
    }

    LemmaOutput lemma3_pm(int n, const Edge &e, Vertex q_k)
    {
        require_odd_n(n);
        JModel J(n);
        Edge ee(e.u, e.v);
        require_matching_in_gj(J, {ee});
        if (q_k < 0 || q_k >= J.g.order() || ! J.is_q(q_k) || ee.touches(q_k))
            throw std::invalid_argument("lemma 3 needs a vertex of Q outside V(e)");
        return lemma3_impl(J, ee, q_k);
    }

    LemmaOutput lemma4_near_pm(int n, const Edge &e0, const std::vector<Edge> &m2)
    {
        require_odd_n(n);
        JModel J(n);
        Edge f0(e0.u, e0.v);
        if (f0.u < 0 || f0.v >= J.g.order() || ! J.in_gq(f0))
            throw std::invalid_argument("lemma 4 needs e0 in G[Q]");
        std::vector<Edge> m;
        for (auto &e : m2)
            m.emplace_back(e.u, e.v);
        if (m.size() != 2)
            throw std::invalid_argument("lemma 4 needs a 2-matching");
        require_matching_in_gj(J, m);
        return lemma4_impl(J, f0, m, nullptr);
    }

    BowtieMatchingPlan bowtie_extend(int n, const std::vector<Edge> &m0)
    {
        require_odd_n(n);
        JModel J(n);
        std::vector<Edge> work;
        for (auto &e : m0)
            work.emplace_back(e.u, e.v);
        if (work.size() != 3)
            throw std::invalid_argument("bowtie_extend needs a 3-matching");
        auto cls = classify_bowtie_edges(n, work);

        // by the up-down symmetry we may assume x >= z
        bool mirrored = cls.z > cls.x;
        if (mirrored) {
            work = J.mirror(work);
            cls = classify_bowtie_edges(n, work);
        }

        auto pick = [&](EdgeClass c, int nth = 0) {
            for (std::size_t i = 0; i < work.size(); ++i)
                if (cls.tags[i] == c && nth-- == 0)
                    return work[i];
            throw std::logic_error("classification mismatch");
        };

        BowtieMatchingPlan plan;
        if (cls.z == 0) {
            auto m = lemma2_matching(n, work);
            plan.case_tag = "z0/" + m.branch;
            plan.j_matching = m.edges;
            plan.jp_matching = J.mirror(m.edges);
            for (int j = 1; j <= 2 * n; ++j)
                if (! covers(m.edges, J.q(j)))
                    plan.rung_edges.emplace_back(J.q(j), J.b.q_prime(j));
        }
        else if (cls.x == 1 && cls.y == 1) {
            Edge e1 = pick(EdgeClass::faithful), rung = pick(EdgeClass::unfaithful), e3 = pick(EdgeClass::co_faithful);
            Vertex qj = J.b.in_j(rung.u) ? rung.u : rung.v;
            auto top = lemma3_impl(J, e1, qj);
            auto bottom = lemma3_impl(J, J.b.mirror(e3), qj);
            plan.case_tag = "xyz=111/" + top.branch.substr(7) + "+" + bottom.branch.substr(7);
            plan.j_matching = concat({e1}, top.edges);
            plan.jp_matching = concat({e3}, J.mirror(bottom.edges));
            plan.rung_edges = {rung};
        }
        else {
            Edge e1 = pick(EdgeClass::faithful, 0), e2 = pick(EdgeClass::faithful, 1), e3 = pick(EdgeClass::co_faithful);
            // e0 carries the Q-image of e3 so the vertex left over in J has a free rung
            Edge image = J.b.mirror(e3);
            Edge e0(J.q(1), J.q(2));
            if (J.in_gq(image))
                e0 = image;
            else if (J.is_spoke(image)) {
                Vertex q = J.spoke_ends(image).second;
                e0 = Edge(q, J.q(J.idx(q) + 1));
            }
            Vertex qj = -1;
            auto top = lemma4_impl(J, e0, {e1, e2}, &qj);
            auto bottom = lemma3_impl(J, image, qj);
            plan.case_tag = "xyz=201/" + top.branch.substr(7) + "+" + bottom.branch.substr(7);
            plan.j_matching = top.edges;
            plan.jp_matching = concat({e3}, J.mirror(bottom.edges));
            plan.rung_edges = {Edge(qj, J.b.q_prime(J.idx(qj)))};
        }

        if (mirrored) {
            auto j = J.mirror(plan.jp_matching);
            plan.jp_matching = J.mirror(plan.j_matching);
            plan.j_matching = std::move(j);
            plan.rung_edges = J.mirror(plan.rung_edges);
            plan.case_tag = "sigma/" + plan.case_tag;
        }
        std::sort(plan.j_matching.begin(), plan.j_matching.end());
        std::sort(plan.jp_matching.begin(), plan.jp_matching.end());
        std::sort(plan.rung_edges.begin(), plan.rung_edges.end());

        auto all = concat(concat(plan.j_matching, plan.jp_matching), plan.rung_edges);
        plan.perfect_matching = make_matching(J.g, all);
        std::vector<Edge> input;
        for (auto &e : m0)
            input.emplace_back(e.u, e.v);
        if (! verify_matching(J.g, plan.perfect_matching, MatchingKind::perfect) || ! plan.perfect_matching.contains_all(input))
            throw TheoremRefutationAlarm("bowtie_extend produced an invalid matching (" + plan.case_tag + ") for " + J.describe(input));
        return plan;
    }
}
