#include "svg_render.hpp"

#include <algorithm>
#include <sstream>

namespace juggle {

namespace {

constexpr double kUnit = 20.0;      // vertical pixels per ball
constexpr double kTrackW = 34.0;    // track width
constexpr double kCardW = 150.0;
constexpr double kPad = 12.0;
constexpr double kHandR = 7.0;

struct track_geom {
    double x, y, w, h;
    double mid_y() const { return y + h / 2; }
};

// Tracks are stacked bottom-up: slot 1 sits just above the hand row.
std::vector<track_geom> stack(const composition& c, double x, double base_y) {
    std::vector<track_geom> out;
    double y = base_y;
    for (int i = 0; i < c.size(); ++i) {
        const double h = c.part(i) * kUnit;
        y -= h;
        out.push_back({x, y + 2, kTrackW, h - 4});
        y -= 4;
    }
    return out;
}

void rect(std::ostringstream& svg, const track_geom& g, const char* fill) {
    svg << "  <rect x='" << g.x << "' y='" << g.y << "' width='" << g.w << "' height='" << g.h
        << "' rx='7' fill='" << fill << "' stroke='black' stroke-width='1.4'/>\n";
}

void line(std::ostringstream& svg, double x1, double y1, double x2, double y2) {
    svg << "  <line x1='" << x1 << "' y1='" << y1 << "' x2='" << x2 << "' y2='" << y2
        << "' stroke='black' stroke-width='1.2'/>\n";
}

}  // namespace

std::string render_cards_svg(const std::vector<card>& cards) {
    int max_balls = 1;
    for (const auto& c : cards) max_balls = std::max(max_balls, c.left().total());
    const double card_h = max_balls * (kUnit + 4) + 3 * kPad + 2 * kHandR + 10;
    const double total_w = kPad + cards.size() * (kCardW + kPad);

    std::ostringstream svg;
    svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << total_w << "' height='"
        << card_h + 2 * kPad << "'>\n";

    double ox = kPad;
    for (const auto& c : cards) {
        const double base_y = kPad + card_h - 2 * kHandR - 8;
        const double left_x = ox + 10;
        const double right_x = ox + kCardW - 10 - kTrackW;
        const double hand_x = ox + kCardW / 2;
        const double hand_y = base_y + kHandR + 6;

        svg << "  <rect x='" << ox << "' y='" << kPad << "' width='" << kCardW << "' height='"
            << card_h << "' rx='10' fill='white' stroke='#888' stroke-width='1'/>\n";

        const auto left_tracks = stack(c.left(), left_x, base_y);
        const auto right_tracks = stack(c.right(), right_x, base_y);

        // Mark which right slots host a surviving group.
        std::vector<bool> shaded(right_tracks.size(), false);
        for (int idx : c.indices()) shaded[static_cast<std::size_t>(idx - 1)] = true;
        if (c.is_trivial()) shaded.assign(shaded.size(), true);

        for (const auto& g : left_tracks) rect(svg, g, "white");
        for (std::size_t i = 0; i < right_tracks.size(); ++i)
            rect(svg, right_tracks[i], shaded[i] ? "#bbb" : "white");

        svg << "  <circle cx='" << hand_x << "' cy='" << hand_y << "' r='" << kHandR
            << "' fill='white' stroke='black' stroke-width='1.4'/>\n";

        if (c.is_trivial()) {
            // Nothing lands: every track passes straight through.
            for (std::size_t i = 0; i < left_tracks.size(); ++i)
                line(svg, left_tracks[i].x + kTrackW, left_tracks[i].mid_y(), right_tracks[i].x,
                     right_tracks[i].mid_y());
        } else {
            // Surviving groups glide to their slots; the bottom group drops
            // into the hand and fans out to every slot receiving balls.
            for (std::size_t j = 0; j < c.indices().size(); ++j) {
                const auto& from = left_tracks[j + 1];
                const auto& to = right_tracks[static_cast<std::size_t>(c.indices()[j] - 1)];
                line(svg, from.x + kTrackW, from.mid_y(), to.x, to.mid_y());
            }
            const auto& bottom = left_tracks[0];
            line(svg, bottom.x + kTrackW, bottom.mid_y(), hand_x, hand_y - kHandR);
            for (std::size_t s = 0; s < right_tracks.size(); ++s)
                if (c.placement()[s] >= 1)
                    line(svg, hand_x, hand_y - kHandR, right_tracks[s].x, right_tracks[s].mid_y());
        }
        ox += kCardW + kPad;
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace juggle
