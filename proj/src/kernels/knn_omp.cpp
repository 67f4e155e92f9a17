#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "copent/kernels.hpp"

namespace copent::kernels {

namespace {

constexpr std::size_t kLeafSize = 12;

// Static kd-tree over a copy of the points, reordered so that every node owns
// a contiguous slice. Splits on the dimension of widest spread at the median.
class KdTree {
public:
    explicit KdTree(const Matrix& points)
        : d_(points.cols()), order_(points.rows())
    {
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        nodes_.reserve(2 * points.rows() / kLeafSize + 2);
        build(points, 0, points.rows());
        coords_.resize(points.rows() * d_);
        for (std::size_t slot = 0; slot < order_.size(); ++slot) {
            const auto src = points.row(order_[slot]);
            std::copy(src.begin(), src.end(), coords_.begin() + static_cast<std::ptrdiff_t>(slot * d_));
        }
    }

    // Distances to the k nearest points other than `self`, as a max-heap.
    void query(std::span<const double> q, std::size_t self, std::size_t k,
               std::vector<double>& heap) const
    {
        heap.clear();
        search(0, q, self, k, heap);
    }

private:
    struct Node {
        std::size_t begin;
        std::size_t end;
        std::size_t dim = 0;
        double split = 0.0;
        std::size_t left = 0;   // 0 marks a leaf; the root is never a child
        std::size_t right = 0;
    };

    std::size_t build(const Matrix& points, std::size_t begin, std::size_t end)
    {
        const std::size_t id = nodes_.size();
        nodes_.push_back(Node{begin, end});
        if (end - begin <= kLeafSize) {
            return id;
        }

        std::size_t best_dim = 0;
        double best_spread = -1.0;
        for (std::size_t c = 0; c < d_; ++c) {
            double lo = std::numeric_limits<double>::infinity();
            double hi = -lo;
            for (std::size_t s = begin; s < end; ++s) {
                const double v = points(order_[s], c);
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            if (hi - lo > best_spread) {
                best_spread = hi - lo;
                best_dim = c;
            }
        }
        if (best_spread <= 0.0) {
            return id;  // all points coincide; keep as an oversized leaf
        }

        const std::size_t mid = begin + (end - begin) / 2;
        auto first = order_.begin();
        std::nth_element(first + static_cast<std::ptrdiff_t>(begin), first + static_cast<std::ptrdiff_t>(mid),
                         first + static_cast<std::ptrdiff_t>(end), [&](std::size_t a, std::size_t b) {
                             return points(a, best_dim) < points(b, best_dim);
                         });
        const double split = points(order_[mid], best_dim);

        const std::size_t left = build(points, begin, mid);
        const std::size_t right = build(points, mid, end);
        Node& node = nodes_[id];
        node.dim = best_dim;
        node.split = split;
        node.left = left;
        node.right = right;
        return id;
    }

    void search(std::size_t id, std::span<const double> q, std::size_t self, std::size_t k,
                std::vector<double>& heap) const
    {
        const Node& node = nodes_[id];
        if (node.left == 0) {
            for (std::size_t s = node.begin; s < node.end; ++s) {
                if (order_[s] == self) {
                    continue;
                }
                const std::span<const double> p(coords_.data() + s * d_, d_);
                const double dist = max_norm_distance(q, p);
                if (heap.size() < k) {
                    heap.push_back(dist);
                    std::push_heap(heap.begin(), heap.end());
                } else if (dist < heap.front()) {
                    std::pop_heap(heap.begin(), heap.end());
                    heap.back() = dist;
                    std::push_heap(heap.begin(), heap.end());
                }
            }
            return;
        }

        // Left slice holds values ≤ split, right slice values ≥ split.
        const double diff = q[node.dim] - node.split;
        const std::size_t near = diff < 0.0 ? node.left : node.right;
        const std::size_t far = diff < 0.0 ? node.right : node.left;
        search(near, q, self, k, heap);
        if (heap.size() < k || std::abs(diff) <= heap.front()) {
            search(far, q, self, k, heap);
        }
    }

    std::size_t d_;
    std::vector<std::size_t> order_;
    std::vector<double> coords_;
    std::vector<Node> nodes_;
};

}  // namespace

NeighborDistances knn_kdtree(const Matrix& points, std::size_t k)
{
    const std::size_t n = points.rows();
    NeighborDistances out{std::vector<double>(n), std::vector<double>(n)};
    const KdTree tree(points);
    const auto count = static_cast<std::ptrdiff_t>(n);

#pragma omp parallel
    {
        std::vector<double> heap;
        heap.reserve(k);
#pragma omp for schedule(static)
        for (std::ptrdiff_t idx = 0; idx < count; ++idx) {
            const auto i = static_cast<std::size_t>(idx);
            tree.query(points.row(i), i, k, heap);
            out.kth[i] = heap.front();
            out.nearest[i] = *std::min_element(heap.begin(), heap.end());
        }
    }
    return out;
}

}  // namespace copent::kernels
