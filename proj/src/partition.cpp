#include "rit/partition.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>

namespace rit {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t j = 0; j < parts_.size(); ++j) {
        if (parts_[j] <= 0)
            throw std::invalid_argument("partition part " + std::to_string(j + 1) +
                                        " is not positive");
        if (j > 0 && parts_[j - 1] < parts_[j])
            throw std::invalid_argument("partition parts are not nonincreasing");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int weight(const Partition& p) noexcept { return p.weight(); }

Partition partition_from_parts(std::span<const int> parts) {
    for (std::size_t j = 0; j < parts.size(); ++j) {
        if (parts[j] <= 0)
            throw ParseError(ParseErrorKind::non_positive_part,
                             "part " + std::to_string(j + 1) + " is " +
                                 std::to_string(parts[j]) + "; parts must be positive");
        if (j > 0 && parts[j - 1] < parts[j])
            throw ParseError(ParseErrorKind::not_nonincreasing,
                             "parts are not nonincreasing: " + std::to_string(parts[j - 1]) +
                                 " is followed by " + std::to_string(parts[j]));
    }
    return Partition(std::vector<int>(parts.begin(), parts.end()));
}

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void expect(char c) {
        skip_space();
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    long long integer() {
        skip_space();
        const char* begin = text_.data() + pos_;
        const char* end = text_.data() + text_.size();
        long long value = 0;
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec == std::errc::result_out_of_range)
            fail("integer out of range");
        if (ec != std::errc())
            fail("expected an integer");
        pos_ += static_cast<std::size_t>(ptr - begin);
        return value;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(ParseErrorKind::syntax, "malformed partition \"" + std::string(text_) +
                                                     "\": " + msg + " at offset " +
                                                     std::to_string(pos_));
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Partition parse_partition(std::string_view text) {
    Cursor in(text);
    std::vector<long long> raw;
    in.expect('[');
    in.skip_space();
    if (in.peek() == ']') {
        in.expect(']');
    } else {
        for (;;) {
            raw.push_back(in.integer());
            in.skip_space();
            if (in.peek() == ',') {
                in.expect(',');
                continue;
            }
            in.expect(']');
            break;
        }
    }
    in.skip_space();
    if (!in.at_end())
        in.fail("trailing characters");

    std::vector<int> parts;
    parts.reserve(raw.size());
    for (long long v : raw) {
        if (v > std::numeric_limits<int>::max())
            in.fail("part too large");
        parts.push_back(v < std::numeric_limits<int>::min() ? std::numeric_limits<int>::min()
                                                             : static_cast<int>(v));
    }
    return partition_from_parts(parts);
}

std::string to_string(const Partition& p) {
    std::string out = "[";
    bool first = true;
    for (int part : p.parts()) {
        if (!first)
            out += ',';
        out += std::to_string(part);
        first = false;
    }
    out += ']';
    return out;
}

PartitionStream::PartitionStream(int n, std::optional<int> max_rows)
    : n_(n), max_rows_(max_rows.value_or(std::max(n, 0))) {
    if (n_ < 0 || (n_ > 0 && max_rows_ <= 0))
        done_ = true;
}

// Successor in decreasing lexicographic order under the row limit: find the
// rightmost part that can be decremented so that the freed boxes still fit
// into the remaining rows, then refill greedily.
bool PartitionStream::advance() {
    int suffix = 0;
    for (std::size_t i = current_.size(); i-- > 0;) {
        int v = current_[i] - 1;
        int freed = suffix + 1;
        suffix += current_[i];
        if (v < 1)
            continue;
        long long capacity = static_cast<long long>(v) * (max_rows_ - static_cast<int>(i) - 1);
        if (freed > capacity)
            continue;
        current_.resize(i + 1);
        current_[i] = v;
        while (freed > 0) {
            int take = std::min(v, freed);
            current_.push_back(take);
            freed -= take;
        }
        return true;
    }
    return false;
}

std::optional<Partition> PartitionStream::next() {
    if (done_)
        return std::nullopt;
    if (!started_) {
        started_ = true;
        if (n_ > 0)
            current_ = {n_};
        return Partition(current_);
    }
    if (!advance()) {
        done_ = true;
        return std::nullopt;
    }
    return Partition(current_);
}

PartitionStream enumerate_partitions(int n, std::optional<int> max_rows) {
    return PartitionStream(n, max_rows);
}

std::vector<Partition> all_partitions(int n, std::optional<int> max_rows) {
    std::vector<Partition> out;
    auto stream = enumerate_partitions(n, max_rows);
    while (auto p = stream.next())
        out.push_back(std::move(*p));
    return out;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int part : p.parts()) {
        h ^= static_cast<std::size_t>(part);
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace rit
