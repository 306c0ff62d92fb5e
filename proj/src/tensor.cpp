#include "subiso/tensor.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

namespace subiso {

namespace {

std::size_t ipow(std::size_t base, int exp) {
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// Extract `len` bits starting at bit `pos` of `words` into buf (word-aligned).
void span_to_buf(const std::uint64_t* words, std::size_t pos, int len, std::uint64_t* buf) {
    int out_words = (len + 63) / 64;
    std::size_t w = pos >> 6, sh = pos & 63;
    for (int i = 0; i < out_words; ++i) {
        std::uint64_t lo = words[w + i] >> sh;
        std::uint64_t hi = sh ? (words[w + i + 1] << (64 - sh)) : 0;
        buf[i] = lo | hi;
    }
    if (len & 63) buf[out_words - 1] &= (std::uint64_t(1) << (len & 63)) - 1;
}

// dst[pos .. pos+len) = buf bits.
void buf_to_span(std::uint64_t* words, std::size_t pos, int len, const std::uint64_t* buf) {
    std::size_t w = pos >> 6, sh = pos & 63;
    int remaining = len;
    int i = 0;
    while (remaining > 0) {
        int chunk = std::min<int>(64, remaining);
        std::uint64_t bits = buf[i];
        if (chunk < 64) bits &= (std::uint64_t(1) << chunk) - 1;
        std::uint64_t mask = (chunk < 64) ? ((std::uint64_t(1) << chunk) - 1) : ~std::uint64_t(0);
        words[w + i] = (words[w + i] & ~(mask << sh)) | (bits << sh);
        if (sh && chunk > int(64 - sh))
            words[w + i + 1] =
                (words[w + i + 1] & ~(mask >> (64 - sh))) | (bits >> (64 - sh));
        remaining -= chunk;
        ++i;
    }
}

// dst span &= buf.
void buf_and_span(std::uint64_t* words, std::size_t pos, int len, const std::uint64_t* buf) {
    std::size_t w = pos >> 6, sh = pos & 63;
    int remaining = len;
    int i = 0;
    while (remaining > 0) {
        int chunk = std::min<int>(64, remaining);
        std::uint64_t mask = (chunk < 64) ? ((std::uint64_t(1) << chunk) - 1) : ~std::uint64_t(0);
        std::uint64_t bits = (buf[i] & mask) << sh | ~(mask << sh);
        words[w + i] &= bits;
        if (sh && chunk > int(64 - sh)) {
            std::uint64_t hi = ((buf[i] & mask) >> (64 - sh)) | ~(mask >> (64 - sh));
            words[w + i + 1] &= hi;
        }
        remaining -= chunk;
        ++i;
    }
}

void span_clear(std::uint64_t* words, std::size_t pos, int len) {
    std::size_t w = pos >> 6, sh = pos & 63;
    int remaining = len;
    int i = 0;
    while (remaining > 0) {
        int chunk = std::min<int>(64, remaining);
        std::uint64_t mask = (chunk < 64) ? ((std::uint64_t(1) << chunk) - 1) : ~std::uint64_t(0);
        words[w + i] &= ~(mask << sh);
        if (sh && chunk > int(64 - sh)) words[w + i + 1] &= ~(mask >> (64 - sh));
        remaining -= chunk;
        ++i;
    }
}

} // namespace

BoolTensor::BoolTensor(int order, int side, std::vector<Vertex> axis_labels)
    : order_(order), side_(side), labels_(std::move(axis_labels)) {
    if (order_ < 1) throw ShapeError("tensor order must be >= 1");
    if (side_ < 0) throw ShapeError("tensor side must be >= 0");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != order_)
        throw ShapeError("axis label count mismatch");
    lead_count_ = std::max(order_ - 2, 0);
    plane_count_ = ipow(std::size_t(side_), lead_count_);
    plane_bits_ = order_ >= 2 ? std::size_t(side_) * side_ : std::size_t(side_);
    plane_words_ = (plane_bits_ + 63) / 64;
    words_.assign(plane_count_ * plane_words_, 0);
}

void BoolTensor::set_axis_labels(std::vector<Vertex> labels) {
    if (static_cast<int>(labels.size()) != order_)
        throw ShapeError("axis label count mismatch");
    labels_ = std::move(labels);
}

std::size_t BoolTensor::entry_count() const { return ipow(std::size_t(side_), order_); }

bool BoolTensor::get(std::span<const int> idx) const {
    std::size_t p = 0;
    for (int i = 0; i < lead_count_; ++i) p = p * side_ + idx[i];
    std::size_t pos = order_ >= 2 ? std::size_t(idx[order_ - 2]) * side_ + idx[order_ - 1]
                                  : std::size_t(idx[0]);
    const std::uint64_t* pl = plane(p);
    return (pl[pos >> 6] >> (pos & 63)) & 1u;
}

void BoolTensor::set(std::span<const int> idx, bool v) {
    std::size_t p = 0;
    for (int i = 0; i < lead_count_; ++i) p = p * side_ + idx[i];
    std::size_t pos = order_ >= 2 ? std::size_t(idx[order_ - 2]) * side_ + idx[order_ - 1]
                                  : std::size_t(idx[0]);
    std::uint64_t* pl = plane(p);
    if (v)
        pl[pos >> 6] |= std::uint64_t(1) << (pos & 63);
    else
        pl[pos >> 6] &= ~(std::uint64_t(1) << (pos & 63));
}

bool BoolTensor::any() const {
    for (auto w : words_)
        if (w) return true;
    return false;
}

void BoolTensor::fill_all(bool v) {
    if (!v) {
        std::fill(words_.begin(), words_.end(), 0);
        return;
    }
    std::fill(words_.begin(), words_.end(), ~std::uint64_t(0));
    // Mask plane tails so equality and popcounts stay meaningful.
    if (plane_bits_ & 63) {
        std::uint64_t mask = (std::uint64_t(1) << (plane_bits_ & 63)) - 1;
        for (std::size_t p = 0; p < plane_count_; ++p) plane(p)[plane_words_ - 1] &= mask;
    }
}

void BoolTensor::and_with(const BoolTensor& o) {
    if (order_ != o.order_ || side_ != o.side_) throw ShapeError("tensor AND shape mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
}

void BoolTensor::or_with(const BoolTensor& o) {
    if (order_ != o.order_ || side_ != o.side_) throw ShapeError("tensor OR shape mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
}

bool BoolTensor::operator==(const BoolTensor& o) const {
    return order_ == o.order_ && side_ == o.side_ && words_ == o.words_;
}

BoolTensor BoolTensor::reorder_keep_last(const std::vector<int>& order) const {
    std::vector<Vertex> new_labels;
    if (!labels_.empty()) {
        for (int t = 0; t < order_; ++t) new_labels.push_back(labels_[order[t]]);
    }
    BoolTensor out(order_, side_, new_labels);
    if (order_ == 1 || side_ == 0) {
        out.words_ = words_;
        return out;
    }
    // inverse map: where does input axis s appear in the output
    std::vector<int> pos_of_input(order_);
    for (int t = 0; t < order_; ++t) pos_of_input[order[t]] = t;

    int lead_out = lead_count_; // same order
    std::vector<int> out_idx(std::max(order_ - 1, 1), 0);
    std::vector<std::uint64_t> rowbuf(std::size_t(side_ + 63) / 64 + 1, 0);
    bool rows_move = order[order_ - 2] != order_ - 2 || lead_out > 0;
    (void)rows_move;
    // Iterate over all output (leading + row) indices, copy n-bit rows.
    std::size_t total_rows = ipow(std::size_t(side_), order_ - 1);
    std::vector<int> src_idx(order_ - 1);
    for (std::size_t row = 0; row < total_rows; ++row) {
        // decode output indices
        std::size_t tmp = row;
        for (int i = order_ - 2; i >= 0; --i) {
            out_idx[i] = int(tmp % side_);
            tmp /= side_;
        }
        // source index for each input axis s<order-1: the output coordinate at
        // pos_of_input[s]
        for (int s = 0; s < order_ - 1; ++s) src_idx[s] = out_idx[pos_of_input[s]];
        std::size_t src_plane = 0;
        for (int i = 0; i < lead_count_; ++i) src_plane = src_plane * side_ + src_idx[i];
        std::size_t src_pos = std::size_t(src_idx[order_ - 2]) * side_;
        std::size_t dst_plane = 0;
        for (int i = 0; i < lead_out; ++i) dst_plane = dst_plane * side_ + out_idx[i];
        std::size_t dst_pos = std::size_t(out_idx[order_ - 2]) * side_;
        span_to_buf(plane(src_plane), src_pos, side_, rowbuf.data());
        buf_to_span(out.plane(dst_plane), dst_pos, side_, rowbuf.data());
    }
    return out;
}

BoolTensor BoolTensor::swap_last_two() const {
    std::vector<Vertex> new_labels = labels_;
    if (!new_labels.empty()) std::swap(new_labels[order_ - 2], new_labels[order_ - 1]);
    BoolTensor out(order_, side_, new_labels);
    if (side_ == 0) return out;
    int n = side_;
    if (n <= 64) {
        std::vector<std::uint64_t> rows(std::size_t(n), 0);
        std::vector<std::uint64_t> cols(std::size_t(n), 0);
        std::vector<std::uint64_t> buf(2, 0);
        for (std::size_t p = 0; p < plane_count_; ++p) {
            const std::uint64_t* src = plane(p);
            for (int r = 0; r < n; ++r) {
                span_to_buf(src, std::size_t(r) * n, n, buf.data());
                rows[r] = buf[0];
            }
            std::fill(cols.begin(), cols.end(), 0);
            for (int r = 0; r < n; ++r) {
                std::uint64_t w = rows[r];
                while (w) {
                    int c = __builtin_ctzll(w);
                    w &= w - 1;
                    cols[c] |= std::uint64_t(1) << r;
                }
            }
            std::uint64_t* dst = out.plane(p);
            for (int r = 0; r < n; ++r) {
                buf[0] = cols[r];
                buf[1] = 0;
                buf_to_span(dst, std::size_t(r) * n, n, buf.data());
            }
        }
        return out;
    }
    // scalar fallback for very wide tensors
    std::vector<int> idx(order_);
    std::size_t total = entry_count();
    for (std::size_t e = 0; e < total; ++e) {
        std::size_t tmp = e;
        for (int i = order_ - 1; i >= 0; --i) {
            idx[i] = int(tmp % side_);
            tmp /= side_;
        }
        bool v = get(idx);
        std::swap(idx[order_ - 2], idx[order_ - 1]);
        out.set(idx, v);
        std::swap(idx[order_ - 2], idx[order_ - 1]);
    }
    return out;
}

BoolTensor BoolTensor::reordered(const std::vector<int>& order) const {
    if (static_cast<int>(order.size()) != order_) throw ShapeError("reorder size mismatch");
    bool identity = true;
    for (int t = 0; t < order_; ++t)
        if (order[t] != t) identity = false;
    if (identity) return *this;
    if (order_ == 1) return *this;
    if (order[order_ - 1] == order_ - 1) return reorder_keep_last(order);

    // Move input axis a=order[q-1] to the last position via one in-plane
    // transpose, then fix up the leading axes.
    int q = order_;
    int a = order[q - 1];
    std::vector<int> pre;
    for (int s = 0; s < q; ++s)
        if (s != a && s != q - 1) pre.push_back(s);
    pre.push_back(a);
    pre.push_back(q - 1);
    BoolTensor t1 = reorder_keep_last(pre); // axes: others..., a, last
    BoolTensor t2 = t1.swap_last_two();     // axes: others..., last, a
    std::vector<int> axes_now;              // in original axis ids
    for (int s = 0; s < q; ++s)
        if (s != a && s != q - 1) axes_now.push_back(s);
    axes_now.push_back(q - 1);
    axes_now.push_back(a);
    std::vector<int> rho(q);
    for (int t = 0; t < q; ++t) {
        auto it = std::find(axes_now.begin(), axes_now.end(), order[t]);
        rho[t] = int(it - axes_now.begin());
    }
    BoolTensor res = t2.reorder_keep_last(rho);
    if (!labels_.empty()) {
        std::vector<Vertex> new_labels(q);
        for (int t = 0; t < q; ++t) new_labels[t] = labels_[order[t]];
        res.set_axis_labels(new_labels);
    }
    return res;
}

BoolTensor BoolTensor::reordered_to_labels(const std::vector<Vertex>& target) const {
    if (labels_.empty()) throw ShapeError("tensor has no axis labels");
    std::vector<int> order(order_);
    for (int t = 0; t < order_; ++t) {
        auto it = std::find(labels_.begin(), labels_.end(), target[t]);
        if (it == labels_.end()) throw ShapeError("target label not present");
        order[t] = int(it - labels_.begin());
    }
    return reordered(order);
}

BoolTensor kwise_product_bool(const std::vector<BoolTensor>& tensors) {
    if (tensors.size() < 2) throw ShapeError("k-wise product needs q >= 2 tensors");
    int q = static_cast<int>(tensors.size());
    int n = tensors[0].side();
    for (const auto& t : tensors)
        if (t.order() != q || t.side() != n)
            throw ShapeError("k-wise product: all tensors must be order q, side n");

    BoolTensor out(q, n);
    if (n == 0) return out;

    if (q == 2) {
        // out[i1,i2] = OR_l A1[l,i2] & A2[i1,l]
        const BoolTensor& a1 = tensors[0];
        const BoolTensor& a2 = tensors[1];
        std::size_t words = out.plane_words();
        std::vector<std::uint64_t> rowbuf(std::size_t(n + 63) / 64 + 1, 0);
        for (int i1 = 0; i1 < n; ++i1) {
            for (int l = 0; l < n; ++l) {
                std::size_t pos = std::size_t(i1) * n + l;
                const std::uint64_t* p2 = a2.plane(0);
                if (!((p2[pos >> 6] >> (pos & 63)) & 1u)) continue;
                span_to_buf(a1.plane(0), std::size_t(l) * n, n, rowbuf.data());
                std::uint64_t tmpbuf[2] = {0, 0};
                span_to_buf(out.plane(0), std::size_t(i1) * n, n, tmpbuf);
                int bw = (n + 63) / 64;
                for (int wI = 0; wI < bw; ++wI) tmpbuf[wI] |= rowbuf[wI];
                buf_to_span(out.plane(0), std::size_t(i1) * n, n, tmpbuf);
            }
        }
        (void)words;
        return out;
    }

    // q >= 3. Iterate over output leading indices and l; AND the relevant
    // planes of A^1..A^{q-2}, then cut rows by A^q's column bit and AND rows
    // with A^{q-1}'s row.
    int lead = q - 2;
    std::size_t pw = out.plane_words();
    std::vector<std::uint64_t> acc(pw);
    std::vector<std::uint64_t> rowbuf(std::size_t(n + 63) / 64 + 1, 0);
    std::vector<int> outer(lead, 0);
    std::size_t n_outer = 1;
    for (int i = 0; i < lead; ++i) n_outer *= std::size_t(n);

    for (std::size_t oidx = 0; oidx < n_outer; ++oidx) {
        std::size_t tmp = oidx;
        for (int i = lead - 1; i >= 0; --i) {
            outer[i] = int(tmp % n);
            tmp /= n;
        }
        std::uint64_t* out_plane = out.plane(oidx);
        for (int l = 0; l < n; ++l) {
            // plane of A^j (1-based j <= q-2): leading indices are outer with
            // position j-1 replaced by l.
            {
                std::size_t p = 0;
                for (int i = 0; i < lead; ++i) p = p * n + (i == 0 ? l : outer[i]);
                std::memcpy(acc.data(), tensors[0].plane(p), pw * 8);
            }
            bool dead = false;
            for (int j = 2; j <= q - 2 && !dead; ++j) {
                std::size_t p = 0;
                for (int i = 0; i < lead; ++i) p = p * n + (i == j - 1 ? l : outer[i]);
                const std::uint64_t* src = tensors[j - 1].plane(p);
                std::uint64_t alive = 0;
                for (std::size_t wI = 0; wI < pw; ++wI) {
                    acc[wI] &= src[wI];
                    alive |= acc[wI];
                }
                dead = alive == 0;
            }
            if (dead) continue;

            // A^{q-1}: axes (x1..x_{q-2}, l, x_q): row l over x_q in plane(outer)
            std::size_t p_prev = 0;
            for (int i = 0; i < lead; ++i) p_prev = p_prev * n + outer[i];
            span_to_buf(tensors[q - 2].plane(p_prev), std::size_t(l) * n, n, rowbuf.data());

            // A^q: axes (x1..x_{q-1}, l): bit (r, l) in plane(outer)
            const std::uint64_t* lastp = tensors[q - 1].plane(p_prev);
            for (int r = 0; r < n; ++r) {
                std::size_t bit = std::size_t(r) * n + l;
                if ((lastp[bit >> 6] >> (bit & 63)) & 1u)
                    buf_and_span(acc.data(), std::size_t(r) * n, n, rowbuf.data());
                else
                    span_clear(acc.data(), std::size_t(r) * n, n);
            }
            for (std::size_t wI = 0; wI < pw; ++wI) out_plane[wI] |= acc[wI];
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

Poly Poly::monomial(std::int64_t exponent, std::int64_t c) {
    if (c == 0) return {};
    Poly p;
    p.lo = exponent;
    p.coeffs = {c};
    return p;
}

bool Poly::is_zero() const { return coeffs.empty(); }

std::int64_t Poly::coeff(std::int64_t exponent) const {
    if (exponent < lo || exponent >= lo + static_cast<std::int64_t>(coeffs.size())) return 0;
    return coeffs[std::size_t(exponent - lo)];
}

std::int64_t Poly::min_exp() const { return lo; }
std::int64_t Poly::max_exp() const { return lo + static_cast<std::int64_t>(coeffs.size()) - 1; }

void Poly::trim() {
    std::size_t front = 0;
    while (front < coeffs.size() && coeffs[front] == 0) ++front;
    if (front == coeffs.size()) {
        coeffs.clear();
        lo = 0;
        return;
    }
    std::size_t back = coeffs.size();
    while (back > 0 && coeffs[back - 1] == 0) --back;
    coeffs = std::vector<std::int64_t>(coeffs.begin() + front, coeffs.begin() + back);
    lo += static_cast<std::int64_t>(front);
}

bool Poly::operator==(const Poly& o) const {
    Poly a = *this, b = o;
    a.trim();
    b.trim();
    return a.lo == b.lo && a.coeffs == b.coeffs;
}

Poly poly_add(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::int64_t lo = std::min(a.lo, b.lo);
    std::int64_t hi = std::max(a.max_exp(), b.max_exp());
    Poly r;
    r.lo = lo;
    r.coeffs.assign(std::size_t(hi - lo + 1), 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        r.coeffs[std::size_t(a.lo - lo) + i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i)
        r.coeffs[std::size_t(b.lo - lo) + i] += b.coeffs[i];
    r.trim();
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly r;
    r.lo = a.lo + b.lo;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    r.trim();
    return r;
}

PolyTensor::PolyTensor(int order, int side, std::vector<Vertex> axis_labels)
    : order_(order), side_(side), labels_(std::move(axis_labels)) {
    if (order_ < 1) throw ShapeError("tensor order must be >= 1");
    if (side_ < 0) throw ShapeError("tensor side must be >= 0");
    entries_.assign(ipow(std::size_t(side_), order_), Poly{});
}

Poly& PolyTensor::at(std::span<const int> idx) {
    std::size_t e = 0;
    for (int i = 0; i < order_; ++i) e = e * side_ + idx[i];
    return entries_[e];
}

const Poly& PolyTensor::at(std::span<const int> idx) const {
    std::size_t e = 0;
    for (int i = 0; i < order_; ++i) e = e * side_ + idx[i];
    return entries_[e];
}

PolyTensor kwise_product_poly(const std::vector<PolyTensor>& tensors, std::int64_t degree_bound) {
    if (tensors.size() < 2) throw ShapeError("k-wise product needs q >= 2 tensors");
    int q = static_cast<int>(tensors.size());
    int n = tensors[0].side();
    for (const auto& t : tensors) {
        if (t.order() != q || t.side() != n)
            throw ShapeError("k-wise product: all tensors must be order q, side n");
        for (const auto& p : t.entries())
            if (!p.is_zero() && (p.min_exp() < -degree_bound || p.max_exp() > degree_bound))
                throw ContractError("k-wise poly product: entry exceeds degree bound");
    }
    PolyTensor out(q, n);
    if (n == 0) return out;

    std::vector<int> idx(q), sub(q);
    std::size_t total = out.entry_count();
    for (std::size_t e = 0; e < total; ++e) {
        std::size_t tmp = e;
        for (int i = q - 1; i >= 0; --i) {
            idx[i] = int(tmp % n);
            tmp /= n;
        }
        Poly acc;
        for (int l = 0; l < n; ++l) {
            Poly prod = Poly::monomial(0, 1);
            for (int j = 0; j < q && !prod.is_zero(); ++j) {
                sub = idx;
                sub[j] = l;
                prod = poly_mul(prod, tensors[j].at(sub));
            }
            acc = poly_add(acc, prod);
        }
        out.at(idx) = std::move(acc);
    }
    return out;
}

// ---------------------------------------------------------------------------

WeightSeq WeightSeq::singleton(std::int64_t w) {
    WeightSeq s;
    s.offset = w;
    s.bits = Bits(1);
    s.bits.set(0);
    return s;
}

WeightSeq WeightSeq::window(std::int64_t lo, std::int64_t hi) {
    WeightSeq s;
    s.offset = lo;
    s.bits = Bits(std::size_t(hi - lo + 1));
    return s;
}

bool WeightSeq::contains(std::int64_t w) const {
    if (w < offset || w >= offset + static_cast<std::int64_t>(bits.size())) return false;
    return bits.get(std::size_t(w - offset));
}

void WeightSeq::add(std::int64_t w) {
    if (w < offset || w >= offset + static_cast<std::int64_t>(bits.size()))
        throw ContractError("weight sequence: value outside window");
    bits.set(std::size_t(w - offset));
}

void WeightSeq::or_merge(const WeightSeq& o) {
    if (o.is_empty()) return;
    if (is_empty() && bits.size() == 0) {
        *this = o;
        return;
    }
    std::int64_t lo = std::min(offset, o.offset);
    std::int64_t hi = std::max(offset + static_cast<std::int64_t>(bits.size()),
                               o.offset + static_cast<std::int64_t>(o.bits.size())) - 1;
    if (lo == offset && hi == offset + static_cast<std::int64_t>(bits.size()) - 1) {
        bits.or_shifted(o.bits, std::size_t(o.offset - lo), o.bits.size());
        return;
    }
    WeightSeq merged = WeightSeq::window(lo, hi);
    merged.bits.or_shifted(bits, std::size_t(offset - lo), bits.size());
    merged.bits.or_shifted(o.bits, std::size_t(o.offset - lo), o.bits.size());
    *this = std::move(merged);
}

WeightSeq WeightSeq::shifted(std::int64_t d) const {
    WeightSeq s = *this;
    s.offset += d;
    return s;
}

WeightSeq WeightSeq::trimmed() const {
    if (!bits.any()) return WeightSeq::empty();
    std::size_t first = 0;
    while (!bits.get(first)) ++first;
    std::size_t last = bits.size() - 1;
    while (!bits.get(last)) --last;
    WeightSeq s = WeightSeq::window(offset + std::int64_t(first), offset + std::int64_t(last));
    for (std::size_t i = first; i <= last; ++i)
        if (bits.get(i)) s.bits.set(i - first);
    return s;
}

std::vector<std::int64_t> WeightSeq::support() const {
    std::vector<std::int64_t> r;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits.get(i)) r.push_back(offset + std::int64_t(i));
    return r;
}

bool WeightSeq::operator==(const WeightSeq& o) const {
    WeightSeq a = trimmed(), b = o.trimmed();
    return a.offset == b.offset && a.bits == b.bits;
}

WeightSeq bool_convolution(const WeightSeq& f, const WeightSeq& g) {
    if (f.is_empty() || g.is_empty()) return WeightSeq::empty();
    WeightSeq a = f.trimmed(), b = g.trimmed();
    WeightSeq out = WeightSeq::window(a.offset + b.offset,
                                      a.offset + b.offset +
                                          std::int64_t(a.bits.size() + b.bits.size()) - 2);
    for (std::size_t i = 0; i < a.bits.size(); ++i)
        if (a.bits.get(i)) out.bits.or_shifted(b.bits, i, b.bits.size());
    return out;
}

WeightSeqTensor::WeightSeqTensor(int order, int side, std::vector<Vertex> axis_labels)
    : order_(order), side_(side), labels_(std::move(axis_labels)) {
    entries_.assign(ipow(std::size_t(side_), order_), WeightSeq{});
}

WeightSeq& WeightSeqTensor::at(std::span<const int> idx) {
    std::size_t e = 0;
    for (int i = 0; i < order_; ++i) e = e * side_ + idx[i];
    return entries_[e];
}

const WeightSeq& WeightSeqTensor::at(std::span<const int> idx) const {
    std::size_t e = 0;
    for (int i = 0; i < order_; ++i) e = e * side_ + idx[i];
    return entries_[e];
}

WeightSeqTensor kwise_product_poly_bool(const std::vector<WeightSeqTensor>& tensors) {
    if (tensors.size() < 2) throw ShapeError("k-wise product needs q >= 2 tensors");
    int q = static_cast<int>(tensors.size());
    int n = tensors[0].side();
    for (const auto& t : tensors)
        if (t.order() != q || t.side() != n)
            throw ShapeError("k-wise product: all tensors must be order q, side n");
    WeightSeqTensor out(q, n);
    if (n == 0) return out;

    std::vector<int> idx(q), sub(q);
    std::size_t total = out.entries().size();
    for (std::size_t e = 0; e < total; ++e) {
        std::size_t tmp = e;
        for (int i = q - 1; i >= 0; --i) {
            idx[i] = int(tmp % n);
            tmp /= n;
        }
        WeightSeq acc;
        for (int l = 0; l < n; ++l) {
            sub = idx;
            sub[0] = l;
            WeightSeq prod = tensors[0].at(sub);
            if (prod.is_empty()) continue;
            bool dead = false;
            for (int j = 1; j < q; ++j) {
                sub = idx;
                sub[j] = l;
                const WeightSeq& f = tensors[j].at(sub);
                if (f.is_empty()) {
                    dead = true;
                    break;
                }
                prod = bool_convolution(prod, f);
            }
            if (!dead) acc.or_merge(prod);
        }
        out.at(idx) = std::move(acc);
    }
    return out;
}

// ---------------------------------------------------------------------------

BitMatrix::BitMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    row_words_ = (std::size_t(cols) + 63) / 64;
    words_.assign(std::size_t(rows) * row_words_, 0);
}

IntMatrix matmul_int(const IntMatrix& a, const IntMatrix& b, MMBackend backend) {
    if (a.cols != b.rows) throw ShapeError("matmul: inner dimensions disagree");
    IntMatrix c(a.rows, b.cols);
    if (backend == MMBackend::naive) {
        for (int i = 0; i < a.rows; ++i)
            for (int l = 0; l < a.cols; ++l) {
                std::int64_t av = a.at(i, l);
                if (av == 0) continue;
                for (int j = 0; j < b.cols; ++j) c.at(i, j) += av * b.at(l, j);
            }
        return c;
    }
    constexpr int T = 48; // cache tile
    for (int i0 = 0; i0 < a.rows; i0 += T)
        for (int l0 = 0; l0 < a.cols; l0 += T)
            for (int j0 = 0; j0 < b.cols; j0 += T)
                for (int i = i0; i < std::min(a.rows, i0 + T); ++i)
                    for (int l = l0; l < std::min(a.cols, l0 + T); ++l) {
                        std::int64_t av = a.at(i, l);
                        if (av == 0) continue;
                        int jmax = std::min(b.cols, j0 + T);
                        for (int j = j0; j < jmax; ++j) c.at(i, j) += av * b.at(l, j);
                    }
    return c;
}

BitMatrix matmul_bool(const BitMatrix& a, const BitMatrix& b, MMBackend backend) {
    if (a.cols() != b.rows()) throw ShapeError("matmul: inner dimensions disagree");
    BitMatrix c(a.rows(), b.cols());
    std::size_t rw = c.row_words();
    if (backend == MMBackend::naive) {
        for (int i = 0; i < a.rows(); ++i) {
            std::uint64_t* crow = c.row(i);
            for (int l = 0; l < a.cols(); ++l) {
                if (!a.get(i, l)) continue;
                const std::uint64_t* brow = b.row(l);
                for (std::size_t w = 0; w < rw; ++w) crow[w] |= brow[w];
            }
        }
        return c;
    }
    constexpr int T = 256;
    for (int l0 = 0; l0 < a.cols(); l0 += T)
        for (int i = 0; i < a.rows(); ++i) {
            std::uint64_t* crow = c.row(i);
            int lmax = std::min(a.cols(), l0 + T);
            for (int l = l0; l < lmax; ++l) {
                if (!a.get(i, l)) continue;
                const std::uint64_t* brow = b.row(l);
                for (std::size_t w = 0; w < rw; ++w) crow[w] |= brow[w];
            }
        }
    return c;
}

WeightSeqMatrix matmul_poly_bool(const WeightSeqMatrix& a, const WeightSeqMatrix& b) {
    if (a.cols != b.rows) throw ShapeError("matmul: inner dimensions disagree");
    WeightSeqMatrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int l = 0; l < a.cols; ++l) {
            const WeightSeq& av = a.at(i, l);
            if (av.is_empty()) continue;
            for (int j = 0; j < b.cols; ++j) {
                const WeightSeq& bv = b.at(l, j);
                if (bv.is_empty()) continue;
                c.at(i, j).or_merge(bool_convolution(av, bv));
            }
        }
    return c;
}

} // namespace subiso
