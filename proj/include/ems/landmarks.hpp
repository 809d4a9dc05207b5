#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ems/errors.hpp"
#include "ems/geometry.hpp"
#include "ems/util.hpp"

namespace ems {

struct Landmark {
    std::string id;
    std::string name;
    Polygon footprint;  // simple polygon, or single vertex for point landmarks
    double height = 0;  // 0 when absent
    bool has_orientation = false;
    Vec2 orientation{1, 0};  // unit facing direction when present
};

// Landmark registry with tolerant token resolution: exact id, exact name,
// case-folded, then with leading noise words ("building", "interstate", ...)
// stripped. Trailing '.'/',' is retried once.
class LandmarkMap {
public:
    void add(Landmark lm) {
        if (lm.id.empty()) throw Error(errc::invalid_argument, "landmark id empty");
        if (by_id_.count(lm.id)) throw Error(errc::duplicate_id, "landmark: " + lm.id);
        if (lm.footprint.size() != 1 &&
            (lm.footprint.size() < 3 || !is_simple_polygon(lm.footprint)))
            throw Error(errc::degenerate_geometry, "landmark footprint not simple: " + lm.id);
        if (lm.has_orientation) {
            double n = norm(lm.orientation);
            if (n <= 0) throw Error(errc::invalid_argument, "zero orientation: " + lm.id);
            lm.orientation = lm.orientation * (1.0 / n);
        }
        size_t pos = items_.size();
        by_id_[lm.id] = pos;
        by_name_.emplace(lm.name, pos);
        by_folded_.emplace(to_lower(lm.id), pos);
        by_folded_.emplace(to_lower(lm.name), pos);
        items_.push_back(std::move(lm));
    }

    size_t size() const { return items_.size(); }
    const std::vector<Landmark>& all() const { return items_; }

    const Landmark* find(const std::string& token) const {
        if (auto it = by_id_.find(token); it != by_id_.end()) return &items_[it->second];
        if (auto it = by_name_.find(token); it != by_name_.end()) return &items_[it->second];
        if (auto it = by_folded_.find(to_lower(token)); it != by_folded_.end())
            return &items_[it->second];
        if (auto stripped = strip_noise(token); stripped && *stripped != token) {
            if (auto it = by_folded_.find(to_lower(*stripped)); it != by_folded_.end())
                return &items_[it->second];
        }
        if (!token.empty() && (token.back() == '.' || token.back() == ',')) {
            std::string t = token.substr(0, token.size() - 1);
            if (const Landmark* lm = find(t)) return lm;
        }
        return nullptr;
    }

    const Landmark& resolve(const std::string& token) const {
        if (const Landmark* lm = find(token)) return *lm;
        throw Error(errc::unresolved_landmark, "landmark not found: " + token);
    }

private:
    static std::optional<std::string> strip_noise(const std::string& token) {
        static const std::vector<std::string> noise{
            "the",    "a",       "an",     "building", "buildings", "interstate", "highway",
            "route",  "rt",      "road",   "street",   "st",        "blvd",       "boulevard",
            "avenue", "ave",     "city",   "town"};
        std::string t = normalize_spaces(token);
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& w : noise) {
                if (t.size() > w.size() + 1 && to_lower(t.substr(0, w.size())) == w &&
                    t[w.size()] == ' ') {
                    t = t.substr(w.size() + 1);
                    changed = true;
                }
            }
        }
        if (t.empty()) return std::nullopt;
        return t;
    }

    std::vector<Landmark> items_;
    std::map<std::string, size_t> by_id_;
    std::map<std::string, size_t> by_name_;
    std::map<std::string, size_t> by_folded_;
};

}  // namespace ems
