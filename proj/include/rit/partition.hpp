#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rit {

/// A partition of n: positive parts in nonincreasing order, top row first.
///
/// Zero parts are never stored. Values are immutable and ordered
/// lexicographically on their parts, so they can key memo tables directly.
class Partition {
public:
    Partition() = default;

    /// Builds a partition from row lengths. Trailing zeros are dropped;
    /// negative parts or an increasing pair throw std::invalid_argument.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    std::span<const int> parts() const noexcept { return parts_; }
    std::size_t rows() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int weight() const noexcept { return weight_; }

    /// Length of the 1-based row `i`; rows past the last one have length 0.
    int row(std::size_t i) const noexcept {
        return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
    }

    /// Length of the top row (λ1), 0 for the empty partition.
    int first() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    friend bool operator==(const Partition& a, const Partition& b) noexcept {
        return a.parts_ == b.parts_;
    }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

int weight(const Partition& p) noexcept;

enum class ParseErrorKind { syntax, non_positive_part, not_nonincreasing };

class ParseError : public std::invalid_argument {
public:
    ParseError(ParseErrorKind kind, const std::string& what)
        : std::invalid_argument(what), kind_(kind) {}
    ParseErrorKind kind() const noexcept { return kind_; }

private:
    ParseErrorKind kind_;
};

/// Parses `[a1,a2,...,ar]`; whitespace is tolerated anywhere between tokens.
/// Parts must be positive and already nonincreasing.
Partition parse_partition(std::string_view text);

/// Validates a list of parts as given (no zeros, no reordering) with the
/// same errors as parse_partition.
Partition partition_from_parts(std::span<const int> parts);

/// Canonical text form, e.g. "[5,4,2,1]" or "[]".
std::string to_string(const Partition& p);

/// Streams the partitions of n in decreasing lexicographic order,
/// optionally limited to at most `max_rows` rows. Single consumer.
class PartitionStream {
public:
    explicit PartitionStream(int n, std::optional<int> max_rows = std::nullopt);

    std::optional<Partition> next();

private:
    bool advance();

    int n_;
    int max_rows_;
    std::vector<int> current_;
    bool started_ = false;
    bool done_ = false;
};

PartitionStream enumerate_partitions(int n, std::optional<int> max_rows = std::nullopt);

/// Eager form of enumerate_partitions.
std::vector<Partition> all_partitions(int n, std::optional<int> max_rows = std::nullopt);

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

}  // namespace rit

template <>
struct std::hash<rit::Partition> : rit::PartitionHash {};
