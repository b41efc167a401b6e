#include "rmt/partition.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "rmt/errors.hpp"

namespace rmt {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
            throw DomainError("partition parts must be weakly decreasing and non-negative");
        }
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::rectangle(int width, int height) {
    if (width < 0 || height < 0) throw DomainError("negative rectangle dimensions");
    if (width == 0) return {};
    return Partition(std::vector<int>(static_cast<std::size_t>(height), width));
}

bool Partition::contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (std::size_t i = 0; i < other.parts_.size(); ++i) {
        if (other.parts_[i] > parts_[i]) return false;
    }
    return true;
}

bool Partition::fits_in_box(int width, int height) const {
    return length() <= height && (empty() || parts_.front() <= width);
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
}

std::string Partition::json() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ']';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    const auto flush = [&] {
        if (token.empty()) return;
        try {
            std::size_t used = 0;
            const int v = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            parts.push_back(v);
        } catch (const std::exception&) {
            throw DomainError("cannot parse partition '" + text + "'");
        }
        token.clear();
    };
    for (char ch : text) {
        if (ch == ',' || ch == ' ' || ch == '(' || ch == ')' || ch == '[' || ch == ']') {
            flush();
        } else {
            token.push_back(ch);
        }
    }
    flush();
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& lambda) {
    if (lambda.empty()) return {};
    std::vector<int> parts(static_cast<std::size_t>(lambda[0]), 0);
    for (int part : lambda.parts()) {
        for (int c = 0; c < part; ++c) ++parts[static_cast<std::size_t>(c)];
    }
    return Partition(std::move(parts));
}

Partition tilde(const Partition& lambda, int N, int p) {
    if (!lambda.fits_in_box(N, p)) {
        throw DomainError("tilde: " + lambda.str() + " is not contained in the (" + std::to_string(N) + "^" +
                          std::to_string(p) + ") box");
    }
    const Partition conj = conjugate(lambda);
    std::vector<int> parts(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) {
        parts[static_cast<std::size_t>(i)] = p - conj[static_cast<std::size_t>(N - 1 - i)];
    }
    return Partition(std::move(parts));
}

bool dominates(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight()) return false;
    int a = 0, b = 0;
    const int len = std::max(lambda.length(), mu.length());
    for (int i = 0; i < len; ++i) {
        a += lambda[static_cast<std::size_t>(i)];
        b += mu[static_cast<std::size_t>(i)];
        if (a < b) return false;
    }
    return true;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) return {};
    return partitions_in_box(n, n, BoxFilter::fixed(n)).collect();
}

bool BoxFilter::accepts(int w) const {
    switch (kind) {
        case Kind::None: return true;
        case Kind::EvenWeight: return w % 2 == 0;
        case Kind::FixedWeight: return w == weight;
    }
    return false;
}

BoxPartitionIterator::BoxPartitionIterator(int maxPart, int maxLength, BoxFilter filter)
    : slots_(static_cast<std::size_t>(std::max(maxLength, 0)), std::max(maxPart, 0)),
      filter_(filter),
      done_(false) {
    if (maxPart < 0 || maxLength < 0) throw DomainError("box dimensions must be non-negative");
    if (filter_.kind == BoxFilter::Kind::FixedWeight) {
        // Start at the lexicographically largest vector of the requested weight.
        int remaining = filter_.weight;
        if (remaining < 0 || remaining > maxPart * maxLength) {
            done_ = true;
            return;
        }
        for (auto& s : slots_) {
            s = std::min(maxPart, remaining);
            remaining -= s;
        }
    }
    settle();
}

bool BoxPartitionIterator::advance_raw() {
    if (filter_.kind == BoxFilter::Kind::FixedWeight) {
        // Next vector of the same weight: lower the rightmost slot that can
        // absorb the mass behind it, then refill greedily.
        int tail = 0;
        for (std::size_t i = slots_.size(); i-- > 0;) {
            if (slots_[i] > 0) {
                const int v = slots_[i] - 1;
                const int need = tail + 1;
                const int room = static_cast<int>(slots_.size() - 1 - i) * v;
                if (need <= room) {
                    slots_[i] = v;
                    int rest = need;
                    for (std::size_t j = i + 1; j < slots_.size(); ++j) {
                        slots_[j] = std::min(v, rest);
                        rest -= slots_[j];
                    }
                    return true;
                }
            }
            tail += slots_[i];
        }
        return false;
    }
    // Decrement the last positive slot and refill everything after it with
    // the new value: the next vector in decreasing lexicographic order.
    std::size_t i = slots_.size();
    while (i > 0 && slots_[i - 1] == 0) --i;
    if (i == 0) return false;
    const int v = --slots_[i - 1];
    for (std::size_t j = i; j < slots_.size(); ++j) slots_[j] = v;
    return true;
}

void BoxPartitionIterator::settle() {
    while (true) {
        const int w = std::accumulate(slots_.begin(), slots_.end(), 0);
        if (filter_.accepts(w)) {
            current_ = Partition(slots_);
            return;
        }
        if (!advance_raw()) {
            done_ = true;
            current_.reset();
            return;
        }
    }
}

BoxPartitionIterator& BoxPartitionIterator::operator++() {
    if (done_) return *this;
    if (!advance_raw()) {
        done_ = true;
        current_.reset();
        return *this;
    }
    settle();
    return *this;
}

std::vector<Partition> BoxPartitions::collect() const {
    std::vector<Partition> out;
    for (const auto& p : *this) out.push_back(p);
    return out;
}

}  // namespace rmt
