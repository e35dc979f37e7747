#pragma once

#include <string>
#include <vector>

namespace qloop {

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::string title;
    std::vector<CheckItem> items;

    void add(std::string name, bool pass, std::string detail = "") {
        items.push_back({std::move(name), pass, std::move(detail)});
    }
    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    int failures() const {
        int k = 0;
        for (const auto& it : items)
            if (!it.pass) ++k;
        return k;
    }
    void merge(const Report& other) {
        for (const auto& it : other.items) items.push_back(it);
    }
};

} // namespace qloop
