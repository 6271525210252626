#include <rpcover/schedule.hpp>

#include <rpcover/binomial.hpp>
#include <rpcover/errors.hpp>

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace rpcover {

namespace {

ClassSet pair_set(int a, int b) { return (ClassSet{1} << a) | (ClassSet{1} << b); }

// Round-robin 1-factorization of K_r (with a bye vertex when r is odd).
std::vector<std::vector<ClassSet>> circle_method(int r)
{
    const int even = r % 2 == 0 ? r : r + 1;
    const int fixed = even - 1;
    std::vector<std::vector<ClassSet>> groups;
    for (int round = 0; round < even - 1; ++round) {
        std::vector<ClassSet> group;
        if (fixed < r)
            group.push_back(pair_set(round, fixed));
        for (int j = 1; j < even / 2; ++j) {
            const int a = (round + j) % (even - 1);
            const int b = (round - j + (even - 1)) % (even - 1);
            group.push_back(pair_set(a, b));
        }
        std::sort(group.begin(), group.end());
        groups.push_back(std::move(group));
    }
    return groups;
}

constexpr std::uint64_t kScheduleBudget = 2'000'000;

class ScheduleSearch {
public:
    ScheduleSearch(int r, int q, int groups) : capacity_(r / q), group_count_(groups)
    {
        for (ClassSet s = 0; s < (ClassSet{1} << r); ++s)
            if (std::popcount(s) == q)
                subsets_.push_back(s);
        used_.assign(subsets_.size(), false);
        slack_ = group_count_ * capacity_ - static_cast<int>(subsets_.size());
    }

    std::vector<std::vector<ClassSet>> run()
    {
        if (!open_group())
            throw std::logic_error("no round schedule found");
        for (auto & g : groups_)
            std::sort(g.begin(), g.end());
        std::sort(groups_.begin(), groups_.end());
        return groups_;
    }

private:
    // Each group starts with the unused subset that has the fewest unused
    // disjoint partners left. Members are added in increasing order.
    bool open_group()
    {
        std::size_t start = subsets_.size();
        std::size_t fewest = subsets_.size() + 1;
        for (std::size_t i = 0; i < subsets_.size(); ++i) {
            if (used_[i])
                continue;
            std::size_t partners = 0;
            for (std::size_t j = 0; j < subsets_.size(); ++j)
                partners += !used_[j] && !(subsets_[i] & subsets_[j]);
            if (partners < fewest) {
                fewest = partners;
                start = i;
            }
        }
        if (start == subsets_.size())
            return static_cast<int>(groups_.size()) == group_count_;
        if (static_cast<int>(groups_.size()) == group_count_)
            return false;
        used_[start] = true;
        groups_.push_back({subsets_[start]});
        if (extend(0, subsets_[start]))
            return true;
        groups_.pop_back();
        used_[start] = false;
        return false;
    }

    bool extend(std::size_t from, ClassSet occupied)
    {
        if (++nodes_ > kScheduleBudget)
            throw BudgetExceeded("round schedule search for r=" + std::to_string(std::bit_width(subsets_.back())) + " gave up after " + std::to_string(kScheduleBudget) + " nodes");
        const int short_by = capacity_ - static_cast<int>(groups_.back().size());
        if (short_by == 0)
            return open_group();
        for (std::size_t i = from; i < subsets_.size(); ++i) {
            if (used_[i] || (subsets_[i] & occupied))
                continue;
            used_[i] = true;
            groups_.back().push_back(subsets_[i]);
            if (extend(i + 1, occupied | subsets_[i]))
                return true;
            groups_.back().pop_back();
            used_[i] = false;
        }
        // close the group short, paying for it from the slack
        if (short_by <= slack_) {
            slack_ -= short_by;
            if (open_group())
                return true;
            slack_ += short_by;
        }
        return false;
    }

    int capacity_;
    int group_count_;
    int slack_ = 0;
    std::uint64_t nodes_ = 0;
    std::vector<ClassSet> subsets_;
    std::vector<bool> used_;
    std::vector<std::vector<ClassSet>> groups_;
};

} // namespace

int schedule_group_count(int r, int q)
{
    if (q < 1 || q > r)
        throw InvalidArgument("subset size q must lie in [1, r]");
    const auto total = binomial(r, q);
    const auto per_group = static_cast<std::uint64_t>(r / q);
    return static_cast<int>((total + per_group - 1) / per_group);
}

RoundSchedule round_schedule(int r, int p)
{
    if (p < 2 || p > r)
        throw InvalidArgument("round_schedule needs 2 <= p <= r");
    if (r > 24)
        throw InvalidArgument("round_schedule supports at most 24 color classes");
    const int q = p - 1;
    RoundSchedule schedule{r, q, {}};
    const int groups = schedule_group_count(r, q);
    if (q == 1) {
        std::vector<ClassSet> all;
        for (int c = 0; c < r; ++c)
            all.push_back(ClassSet{1} << c);
        schedule.groups.push_back(std::move(all));
    } else if (q == 2) {
        schedule.groups = circle_method(r);
    } else {
        schedule.groups = ScheduleSearch(r, q, groups).run();
    }
    if (static_cast<int>(schedule.groups.size()) != groups)
        throw std::logic_error("round schedule has " + std::to_string(schedule.groups.size()) + " groups, expected " +
                               std::to_string(groups));
    return schedule;
}

} // namespace rpcover
