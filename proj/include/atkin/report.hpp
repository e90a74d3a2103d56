#ifndef ATKIN_REPORT_HPP
#define ATKIN_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace atkin
{

struct check_entry
{
    std::string id;
    bool passed = false;
    std::string detail;
    // Truncation order the identity was checked at (0 when not a series check).
    long order = 0;
};

struct report
{
    std::string suite;
    std::vector<check_entry> entries;

    void add(std::string id, bool ok, std::string detail = {}, long order = 0)
    {
        entries.push_back({std::move(id), ok, std::move(detail), order});
    }

    void append(const report &other)
    {
        entries.insert(entries.end(), other.entries.begin(), other.entries.end());
    }

    bool passed() const
    {
        for (const auto &e : entries) {
            if (!e.passed) {
                return false;
            }
        }
        return !entries.empty();
    }

    std::size_t failures() const
    {
        std::size_t n = 0;
        for (const auto &e : entries) {
            n += e.passed ? 0 : 1;
        }
        return n;
    }
};

} // namespace atkin

#endif
