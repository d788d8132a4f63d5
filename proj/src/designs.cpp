#include "framekit/designs.hpp"

#include <algorithm>
#include <stdexcept>

namespace framekit::designs {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

void require_valid(const ValidityReport& report, const std::string& what) {
    if (!report.valid()) throw std::invalid_argument(what + ": " + report.summary());
}

std::string block_text(const BlockDesign& d, const std::vector<int>& block) {
    std::string out = "{";
    for (std::size_t i = 0; i < block.size(); ++i) {
        if (i) out += " ";
        out += d.points[block[i]];
    }
    return out + "}";
}

// Partition of the point set into groups; singletons when undeclared.
std::vector<std::vector<int>> effective_groups(const BlockDesign& d) {
    if (d.groups) return *d.groups;
    std::vector<std::vector<int>> singles;
    for (int i = 0; i < static_cast<int>(d.points.size()); ++i) singles.push_back({i});
    return singles;
}

// group_of[p] = index of the part containing p; -1 on missing, reported.
std::vector<int> part_index(const std::vector<std::vector<int>>& parts, int v, const char* what,
                            ValidityReport& report) {
    std::vector<int> owner(v, -1);
    for (int gi = 0; gi < static_cast<int>(parts.size()); ++gi) {
        for (int p : parts[gi]) {
            if (p < 0 || p >= v) {
                report.add(std::string(what) + "-range", std::to_string(p), "point index out of range");
                continue;
            }
            if (owner[p] != -1)
                report.add(std::string(what) + "-overlap", std::to_string(p), "point in two parts");
            owner[p] = gi;
        }
    }
    for (int p = 0; p < v; ++p)
        if (owner[p] == -1) report.add(std::string(what) + "-cover", std::to_string(p), "point in no part");
    return owner;
}

// Pair-coverage audit shared by verify_gdd and verify_k_frame: cross-part
// pairs exactly lambda times, within-part pairs never.
void audit_pairs(const BlockDesign& d, const std::vector<int>& owner, int lambda, ValidityReport& report) {
    int v = static_cast<int>(d.points.size());
    std::vector<int> count(static_cast<std::size_t>(v) * v, 0);
    for (const auto& block : d.blocks) {
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j) {
                int a = std::min(block[i], block[j]);
                int b = std::max(block[i], block[j]);
                count[static_cast<std::size_t>(a) * v + b] += 1;
            }
    }
    for (int a = 0; a < v; ++a) {
        for (int b = a + 1; b < v; ++b) {
            int c = count[static_cast<std::size_t>(a) * v + b];
            std::string loc = d.points[a] + "," + d.points[b];
            if (owner[a] == owner[b] && owner[a] != -1) {
                if (c != 0) report.add("pair-within-part", loc, "covered " + std::to_string(c) + " times");
            } else if (c != lambda) {
                report.add("pair-coverage", loc,
                           "covered " + std::to_string(c) + " times, expected " + std::to_string(lambda));
            }
        }
    }
}

}  // namespace

int BlockDesign::index_of(const std::string& token) const {
    for (int i = 0; i < static_cast<int>(points.size()); ++i)
        if (points[i] == token) return i;
    return -1;
}

ValidityReport verify_gdd(const BlockDesign& design) {
    ValidityReport report;
    int v = static_cast<int>(design.points.size());
    for (const auto& block : design.blocks) {
        if (block.size() < 2) report.add("block-size", block_text(design, block), "block smaller than 2");
        if (design.block_sizes && !design.block_sizes->count(static_cast<int>(block.size())))
            report.add("block-size", block_text(design, block), "size outside the declared constraint set");
        for (int p : block)
            if (p < 0 || p >= v) report.add("block-range", std::to_string(p), "point index out of range");
        for (std::size_t i = 0; i + 1 < block.size(); ++i)
            if (block[i] >= block[i + 1])
                report.add("block-order", block_text(design, block), "block not strictly sorted");
    }
    if (!report.valid()) return report;

    auto owner = part_index(effective_groups(design), v, "group", report);
    if (!report.valid()) return report;
    audit_pairs(design, owner, design.lambda, report);
    return report;
}

BlockDesign gdd_from_bibd(const BlockDesign& design, const std::string& point) {
    require_valid(verify_gdd(design), "gdd_from_bibd input");
    require(!design.groups || std::all_of(design.groups->begin(), design.groups->end(),
                                          [](const auto& g) { return g.size() == 1; }),
            "gdd_from_bibd expects a PBD");
    int p = design.index_of(point);
    require(p >= 0, "unknown point " + point);

    BlockDesign out;
    for (int i = 0; i < static_cast<int>(design.points.size()); ++i)
        if (i != p) out.points.push_back(design.points[i]);
    auto remap = [&](int q) { return q < p ? q : q - 1; };

    std::vector<std::vector<int>> groups;
    for (const auto& block : design.blocks) {
        std::vector<int> image;
        bool through = false;
        for (int q : block) {
            if (q == p)
                through = true;
            else
                image.push_back(remap(q));
        }
        if (through)
            groups.push_back(std::move(image));
        else
            out.blocks.push_back(std::move(image));
    }
    out.lambda = design.lambda;
    out.groups = std::move(groups);
    require_valid(verify_gdd(out), "gdd_from_bibd output");
    return out;
}

ValidityReport verify_k_frame(const ResolvedBlockDesign& frame, int k, int lambda) {
    ValidityReport report;
    const auto& d = frame.design;
    int v = static_cast<int>(d.points.size());

    if (frame.block_size != k)
        report.add("frame-shape", "k", "declared block size " + std::to_string(frame.block_size));
    if (d.lambda != lambda)
        report.add("frame-shape", "lambda", "declared lambda " + std::to_string(d.lambda));
    for (const auto& block : d.blocks)
        if (static_cast<int>(block.size()) != k)
            report.add("block-size", block_text(d, block), "expected size " + std::to_string(k));
    if (!report.valid()) return report;

    std::vector<int> owner(v, 0);
    if (frame.fully_resolvable()) {
        for (int p = 0; p < v; ++p) owner[p] = p;  // no within-hole pairs
    } else {
        owner = part_index(frame.holes, v, "hole", report);
        if (!report.valid()) return report;
    }
    audit_pairs(d, frame.fully_resolvable() ? std::vector<int>(owner) : owner, lambda, report);

    // Every block in exactly one class.
    std::vector<int> block_class(d.blocks.size(), -1);
    for (int ci = 0; ci < static_cast<int>(frame.classes.size()); ++ci) {
        for (int bi : frame.classes[ci].second) {
            if (bi < 0 || bi >= static_cast<int>(d.blocks.size())) {
                report.add("class-range", std::to_string(bi), "block index out of range");
                continue;
            }
            if (block_class[bi] != -1)
                report.add("class-overlap", block_text(d, d.blocks[bi]), "block in two classes");
            block_class[bi] = ci;
        }
    }
    for (int bi = 0; bi < static_cast<int>(d.blocks.size()); ++bi)
        if (block_class[bi] == -1) report.add("class-cover", block_text(d, d.blocks[bi]), "block in no class");

    // Each class partitions the points outside its hole.
    for (int ci = 0; ci < static_cast<int>(frame.classes.size()); ++ci) {
        auto [hole, blocks] = frame.classes[ci];
        std::vector<int> seen(v, 0);
        for (int bi : blocks)
            if (bi >= 0 && bi < static_cast<int>(d.blocks.size()))
                for (int p : d.blocks[bi]) seen[p] += 1;
        std::set<int> excluded;
        if (hole != kFullClass) {
            if (hole < 0 || hole >= static_cast<int>(frame.holes.size())) {
                report.add("class-hole", "class " + std::to_string(ci), "hole index out of range");
                continue;
            }
            excluded.insert(frame.holes[hole].begin(), frame.holes[hole].end());
        }
        for (int p = 0; p < v; ++p) {
            int expected = excluded.count(p) ? 0 : 1;
            if (seen[p] != expected)
                report.add("class-partition", "class " + std::to_string(ci) + ", point " + d.points[p],
                           "covered " + std::to_string(seen[p]) + " times, expected " + std::to_string(expected));
        }
    }

    // Per-hole class counts.
    if (frame.fully_resolvable()) {
        int expected = lambda * (v - 1) / (k - 1);
        int full = 0;
        for (const auto& [hole, blocks] : frame.classes)
            if (hole == kFullClass)
                ++full;
            else
                report.add("class-hole", "class", "holey class in a fully resolvable design");
        if (full != expected)
            report.add("class-count", "full",
                       std::to_string(full) + " classes, expected " + std::to_string(expected));
    } else {
        std::vector<int> per_hole(frame.holes.size(), 0);
        for (const auto& [hole, blocks] : frame.classes) {
            if (hole == kFullClass)
                report.add("class-hole", "class", "full class in a frame");
            else if (hole >= 0 && hole < static_cast<int>(frame.holes.size()))
                per_hole[hole] += 1;
        }
        for (int hi = 0; hi < static_cast<int>(frame.holes.size()); ++hi) {
            int t = static_cast<int>(frame.holes[hi].size());
            if ((lambda * t) % (k - 1) != 0) {
                report.add("class-count", "hole " + std::to_string(hi), "lambda*t not divisible by k-1");
                continue;
            }
            int expected = lambda * t / (k - 1);
            if (per_hole[hi] != expected)
                report.add("class-count", "hole " + std::to_string(hi),
                           std::to_string(per_hole[hi]) + " classes, expected " + std::to_string(expected));
        }
    }
    return report;
}

ResolvedBlockDesign rbibd_to_kframe(const ResolvedBlockDesign& design, const std::string& point) {
    require(design.fully_resolvable(), "input design is not resolvable");
    require(design.design.lambda == 1, "deletion needs lambda = 1");
    require_valid(verify_k_frame(design, design.block_size, 1), "rbibd_to_kframe input");
    int p = design.design.index_of(point);
    require(p >= 0, "unknown point " + point);

    ResolvedBlockDesign out;
    out.block_size = design.block_size;
    out.design.lambda = 1;
    for (int i = 0; i < static_cast<int>(design.design.points.size()); ++i)
        if (i != p) out.design.points.push_back(design.design.points[i]);
    auto remap = [&](int q) { return q < p ? q : q - 1; };

    // Blocks through p become holes; each full class loses exactly one such
    // block and becomes the holey class of that hole.
    std::vector<int> block_to_hole(design.design.blocks.size(), -1);
    std::vector<int> new_index(design.design.blocks.size(), -1);
    for (int bi = 0; bi < static_cast<int>(design.design.blocks.size()); ++bi) {
        const auto& block = design.design.blocks[bi];
        std::vector<int> image;
        bool through = false;
        for (int q : block) {
            if (q == p)
                through = true;
            else
                image.push_back(remap(q));
        }
        if (through) {
            block_to_hole[bi] = static_cast<int>(out.holes.size());
            out.holes.push_back(std::move(image));
        } else {
            new_index[bi] = static_cast<int>(out.design.blocks.size());
            out.design.blocks.push_back(std::move(image));
        }
    }

    for (const auto& [tag, blocks] : design.classes) {
        require(tag == kFullClass, "input classes must be full");
        int hole = -1;
        std::vector<int> kept;
        for (int bi : blocks) {
            if (block_to_hole[bi] != -1) {
                require(hole == -1, "class contains two blocks through the point");
                hole = block_to_hole[bi];
            } else {
                kept.push_back(new_index[bi]);
            }
        }
        require(hole != -1, "class contains no block through the point");
        out.classes.emplace_back(hole, std::move(kept));
    }

    require_valid(verify_k_frame(out, out.block_size, 1), "rbibd_to_kframe output");
    return out;
}

ResolvedBlockDesign kframe_to_rbibd(const ResolvedBlockDesign& frame, const std::string& point) {
    require_valid(verify_k_frame(frame, frame.block_size, 1), "kframe_to_rbibd input");
    require(frame.design.index_of(point) < 0, "new point already present");
    for (const auto& hole : frame.holes)
        require(static_cast<int>(hole.size()) == frame.block_size - 1, "holes must have size k-1");

    ResolvedBlockDesign out;
    out.block_size = frame.block_size;
    out.design.lambda = 1;
    out.design.points = frame.design.points;
    out.design.points.push_back(point);
    int p = static_cast<int>(out.design.points.size()) - 1;
    out.design.blocks = frame.design.blocks;
    out.holes = {{}};

    for (const auto& [hole, blocks] : frame.classes) {
        require(hole != kFullClass, "input classes must be holey");
        std::vector<int> block = frame.holes[hole];
        block.push_back(p);
        std::sort(block.begin(), block.end());
        std::vector<int> extended = blocks;
        extended.push_back(static_cast<int>(out.design.blocks.size()));
        out.design.blocks.push_back(std::move(block));
        out.classes.emplace_back(kFullClass, std::move(extended));
    }

    require_valid(verify_k_frame(out, out.block_size, 1), "kframe_to_rbibd output");
    return out;
}

ResolvedBlockDesign kts_to_frame(const ResolvedBlockDesign& kts, const std::string& point) {
    require(kts.block_size == 3, "kts_to_frame expects block size 3");
    return rbibd_to_kframe(kts, point);
}

ResolvedBlockDesign frame_to_kts(const ResolvedBlockDesign& frame, const std::string& infinity) {
    require(frame.block_size == 3, "frame_to_kts expects block size 3");
    for (const auto& hole : frame.holes) require(hole.size() == 2, "frame_to_kts expects holes of size 2");
    return kframe_to_rbibd(frame, infinity);
}

BlockDesign kts_to_completed(const ResolvedBlockDesign& kts, const std::vector<std::string>& new_points) {
    require(kts.block_size == 3 && kts.fully_resolvable(), "input is not a KTS");
    require_valid(verify_k_frame(kts, 3, 1), "kts_to_completed input");
    int r = static_cast<int>(kts.classes.size());
    require(new_points.empty() || static_cast<int>(new_points.size()) == r,
            "expected one new point per parallel class");

    BlockDesign out;
    out.points = kts.design.points;
    int v = static_cast<int>(out.points.size());
    std::vector<int> infs;
    for (int i = 0; i < r; ++i) {
        std::string token = new_points.empty() ? "inf" + std::to_string(i + 1) : new_points[i];
        require(out.index_of(token) < 0, "new point " + token + " already present");
        infs.push_back(v + i);
        out.points.push_back(token);
    }
    for (int ci = 0; ci < r; ++ci) {
        for (int bi : kts.classes[ci].second) {
            std::vector<int> block = kts.design.blocks[bi];
            block.push_back(infs[ci]);
            std::sort(block.begin(), block.end());
            out.blocks.push_back(std::move(block));
        }
    }
    out.blocks.push_back(infs);
    out.lambda = 1;
    out.block_sizes = std::set<int>{4, r};
    require_valid(verify_gdd(out), "kts_to_completed output");
    return out;
}

ResolvedBlockDesign completed_to_kts(const BlockDesign& design, const std::vector<std::string>& new_points) {
    require_valid(verify_gdd(design), "completed_to_kts input");
    std::set<int> infs;
    for (const auto& token : new_points) {
        int p = design.index_of(token);
        require(p >= 0, "unknown point " + token);
        infs.insert(p);
    }

    ResolvedBlockDesign out;
    out.block_size = 3;
    out.design.lambda = 1;
    out.holes = {{}};
    std::vector<int> remap(design.points.size(), -1);
    for (int i = 0; i < static_cast<int>(design.points.size()); ++i) {
        if (infs.count(i)) continue;
        remap[i] = static_cast<int>(out.design.points.size());
        out.design.points.push_back(design.points[i]);
    }

    std::map<int, std::vector<int>> class_blocks;  // added point -> block indices
    for (const auto& block : design.blocks) {
        std::vector<int> image;
        std::vector<int> hit;
        for (int q : block) {
            if (infs.count(q))
                hit.push_back(q);
            else
                image.push_back(remap[q]);
        }
        if (static_cast<int>(hit.size()) == static_cast<int>(infs.size()) && image.empty())
            continue;  // the all-new-points block
        require(hit.size() == 1 && image.size() == 3, "block is not a triple plus one added point");
        class_blocks[hit[0]].push_back(static_cast<int>(out.design.blocks.size()));
        out.design.blocks.push_back(std::move(image));
    }
    for (const auto& token : new_points) {
        int p = design.index_of(token);
        require(class_blocks.count(p) > 0, "added point " + token + " lies in no triple");
        out.classes.emplace_back(kFullClass, class_blocks.at(p));
    }

    require_valid(verify_k_frame(out, 3, 1), "completed_to_kts output");
    return out;
}

ResolvedBlockDesign gdd_weight_construction(const BlockDesign& design, int w,
                                            const std::map<int, ResolvedBlockDesign>& templates) {
    require(w >= 2 && w % 2 == 0, "weight must be even and at least 2");
    require(design.lambda == 1, "weighting needs lambda = 1");
    require_valid(verify_gdd(design), "weighting input design");

    // Per-block-size template: a Kirkman frame of type w^k whose holes,
    // listed in order, are matched to the block's points in ascending order.
    struct Prepared {
        const ResolvedBlockDesign* frame;
        std::vector<std::vector<int>> hole_points;          // hole -> point indices, listed order
        std::vector<std::vector<int>> classes_of_hole;      // hole -> class indices, listed order
    };
    std::map<int, Prepared> prepared;
    std::set<int> sizes;
    for (const auto& block : design.blocks) sizes.insert(static_cast<int>(block.size()));
    for (int k : sizes) {
        auto it = templates.find(k);
        require(it != templates.end(), "missing template frame for block size " + std::to_string(k));
        const auto& tpl = it->second;
        require_valid(verify_k_frame(tpl, 3, 1), "template for block size " + std::to_string(k));
        require(static_cast<int>(tpl.holes.size()) == k, "template hole count must equal the block size");
        Prepared prep{&tpl, tpl.holes, {}};
        prep.classes_of_hole.resize(k);
        for (int ci = 0; ci < static_cast<int>(tpl.classes.size()); ++ci)
            prep.classes_of_hole[tpl.classes[ci].first].push_back(ci);
        for (const auto& hole : tpl.holes)
            require(static_cast<int>(hole.size()) == w, "template hole size must equal the weight");
        prepared.emplace(k, std::move(prep));
    }

    ResolvedBlockDesign out;
    out.block_size = 3;
    out.design.lambda = 1;
    int v = static_cast<int>(design.points.size());
    for (int x = 0; x < v; ++x)
        for (int j = 1; j <= w; ++j) out.design.points.push_back(design.points[x] + "." + std::to_string(j));
    auto copy_of = [&](int x, int j) { return x * w + j; };  // j in [0, w)

    auto groups = effective_groups(design);
    std::vector<int> group_of(v, -1);
    for (int gi = 0; gi < static_cast<int>(groups.size()); ++gi) {
        std::vector<int> hole;
        for (int x : groups[gi]) {
            group_of[x] = gi;
            for (int j = 0; j < w; ++j) hole.push_back(copy_of(x, j));
        }
        out.holes.push_back(std::move(hole));
    }

    // Inflate each block: relabel its template's points (hole i, slot s) to
    // the copies of the block's i-th point, and record where each template
    // block lands and which (point-of-block, class index) owns it.
    int blocks_n = static_cast<int>(design.blocks.size());
    // placed[bi][tpl block index] = output block index
    std::vector<std::vector<int>> placed(blocks_n);
    for (int bi = 0; bi < blocks_n; ++bi) {
        const auto& block = design.blocks[bi];
        const auto& prep = prepared.at(static_cast<int>(block.size()));
        std::vector<int> tpl_to_out(prep.frame->design.points.size(), -1);
        for (int hi = 0; hi < static_cast<int>(block.size()); ++hi)
            for (int s = 0; s < w; ++s) tpl_to_out[prep.hole_points[hi][s]] = copy_of(block[hi], s);
        placed[bi].resize(prep.frame->design.blocks.size());
        for (int tb = 0; tb < static_cast<int>(prep.frame->design.blocks.size()); ++tb) {
            std::vector<int> image;
            for (int q : prep.frame->design.blocks[tb]) image.push_back(tpl_to_out[q]);
            std::sort(image.begin(), image.end());
            placed[bi][tb] = static_cast<int>(out.design.blocks.size());
            out.design.blocks.push_back(std::move(image));
        }
    }

    // Classes: for each point x and j in [1, w/2], take hole {x} x W's j-th
    // class in every block through x; their union partitions the points
    // outside (group of x) x W.
    for (int x = 0; x < v; ++x) {
        for (int j = 0; j < w / 2; ++j) {
            std::vector<int> members;
            for (int bi = 0; bi < blocks_n; ++bi) {
                const auto& block = design.blocks[bi];
                auto pos = std::find(block.begin(), block.end(), x);
                if (pos == block.end()) continue;
                int hi = static_cast<int>(pos - block.begin());
                const auto& prep = prepared.at(static_cast<int>(block.size()));
                require(static_cast<int>(prep.classes_of_hole[hi].size()) == w / 2,
                        "template has the wrong per-hole class count");
                for (int tb : prep.frame->classes[prep.classes_of_hole[hi][j]].second)
                    members.push_back(placed[bi][tb]);
            }
            out.classes.emplace_back(group_of[x], std::move(members));
        }
    }

    require_valid(verify_k_frame(out, 3, 1), "weighting output");
    return out;
}

ResolvedBlockDesign kirkman_4_4_from_iols(const latin::IncompleteOLSPair& pair) {
    require(pair.order == 6 && pair.hole == 2, "expected an incomplete pair of order 6 with hole 2");
    require_valid(latin::verify_incomplete_pair(pair), "incomplete pair");

    // 24 points: rows, columns, and the symbols of each grid. The hole rows,
    // hole columns and hole symbols (the last two of each grid) are deleted.
    std::vector<std::string> all;
    for (int i = 1; i <= 6; ++i) all.push_back("r" + std::to_string(i));
    for (int i = 1; i <= 6; ++i) all.push_back("c" + std::to_string(i));
    for (int i = 1; i <= 6; ++i) all.push_back(std::to_string(i));
    for (int i = 0; i < 6; ++i) all.push_back(std::string(1, static_cast<char>('a' + i)));
    auto row_pt = [](int i) { return i; };
    auto col_pt = [](int j) { return 6 + j; };
    auto sym1_pt = [](int s) { return 12 + s; };
    auto sym2_pt = [](int s) { return 18 + s; };
    std::set<int> deleted = {row_pt(4), row_pt(5), col_pt(4), col_pt(5),
                             sym1_pt(4), sym1_pt(5), sym2_pt(4), sym2_pt(5)};

    ResolvedBlockDesign out;
    out.block_size = 3;
    out.design.lambda = 1;
    std::vector<int> remap(all.size(), -1);
    for (int i = 0; i < static_cast<int>(all.size()); ++i) {
        if (deleted.count(i)) continue;
        remap[i] = static_cast<int>(out.design.points.size());
        out.design.points.push_back(all[i]);
    }
    out.holes = {{remap[sym1_pt(0)], remap[sym1_pt(1)], remap[sym1_pt(2)], remap[sym1_pt(3)]},
                 {remap[sym2_pt(0)], remap[sym2_pt(1)], remap[sym2_pt(2)], remap[sym2_pt(3)]},
                 {remap[row_pt(0)], remap[row_pt(1)], remap[row_pt(2)], remap[row_pt(3)]},
                 {remap[col_pt(0)], remap[col_pt(1)], remap[col_pt(2)], remap[col_pt(3)]}};

    // One size-4 block per filled cell; exactly one of its points is deleted
    // and that point names the holey class the remaining triple joins.
    std::map<int, std::vector<int>> class_blocks;
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            if (pair.in_hole(i, j)) continue;
            std::vector<int> quad = {row_pt(i), col_pt(j), sym1_pt(pair.first[i][j]), sym2_pt(pair.second[i][j])};
            std::vector<int> triple;
            std::vector<int> gone;
            for (int q : quad) (deleted.count(q) ? gone : triple).push_back(q);
            require(gone.size() == 1, "cell block must lose exactly one point");
            for (int& q : triple) q = remap[q];
            std::sort(triple.begin(), triple.end());
            class_blocks[gone[0]].push_back(static_cast<int>(out.design.blocks.size()));
            out.design.blocks.push_back(std::move(triple));
        }
    }

    // A deleted point's class misses exactly one hole: the one disjoint from
    // the points its blocks cover.
    for (int p : deleted) {
        require(class_blocks.count(p) > 0, "deleted point " + all[p] + " lies in no block");
        std::set<int> covered;
        for (int bi : class_blocks.at(p))
            covered.insert(out.design.blocks[bi].begin(), out.design.blocks[bi].end());
        int hole = -1;
        for (int hi = 0; hi < 4; ++hi) {
            bool disjoint = std::none_of(out.holes[hi].begin(), out.holes[hi].end(),
                                         [&](int q) { return covered.count(q) > 0; });
            if (disjoint) {
                require(hole == -1, "class misses two holes");
                hole = hi;
            }
        }
        require(hole != -1, "class misses no hole");
        out.classes.emplace_back(hole, class_blocks.at(p));
    }

    require_valid(verify_k_frame(out, 3, 1), "4^4 frame output");
    return out;
}

BlockDesign bibd_13_4() {
    BlockDesign out;
    for (int i = 0; i < 13; ++i) out.points.push_back(std::to_string(i));
    for (int i = 0; i < 13; ++i) {
        std::vector<int> block = {i % 13, (i + 1) % 13, (i + 3) % 13, (i + 9) % 13};
        std::sort(block.begin(), block.end());
        out.blocks.push_back(std::move(block));
    }
    out.lambda = 1;
    out.block_sizes = std::set<int>{4};
    return out;
}

ResolvedBlockDesign kts9() {
    ResolvedBlockDesign out;
    out.block_size = 3;
    out.design.lambda = 1;
    out.holes = {{}};
    for (int i = 0; i < 9; ++i) out.design.points.push_back(std::to_string(i));
    auto pt = [](int a, int b) { return 3 * ((a % 3 + 3) % 3) + ((b % 3 + 3) % 3); };
    const int dirs[4][2] = {{0, 1}, {1, 0}, {1, 1}, {1, 2}};
    for (const auto& d : dirs) {
        std::vector<int> members;
        for (int base = 0; base < 3; ++base) {
            int a0 = d[0] == 0 ? base : 0;
            int b0 = d[0] == 0 ? 0 : base;
            std::vector<int> line = {pt(a0, b0), pt(a0 + d[0], b0 + d[1]), pt(a0 + 2 * d[0], b0 + 2 * d[1])};
            std::sort(line.begin(), line.end());
            members.push_back(static_cast<int>(out.design.blocks.size()));
            out.design.blocks.push_back(std::move(line));
        }
        out.classes.emplace_back(kFullClass, std::move(members));
    }
    return out;
}

ResolvedBlockDesign near_resolvable_7_3_2() {
    ResolvedBlockDesign out;
    out.block_size = 3;
    out.design.lambda = 2;
    for (int i = 0; i < 7; ++i) out.design.points.push_back(std::to_string(i));
    for (int i = 0; i < 7; ++i) out.holes.push_back({i});
    for (int i = 0; i < 7; ++i) {
        std::vector<int> b1 = {(1 + i) % 7, (2 + i) % 7, (4 + i) % 7};
        std::vector<int> b2 = {(3 + i) % 7, (5 + i) % 7, (6 + i) % 7};
        std::sort(b1.begin(), b1.end());
        std::sort(b2.begin(), b2.end());
        int at = static_cast<int>(out.design.blocks.size());
        out.design.blocks.push_back(std::move(b1));
        out.design.blocks.push_back(std::move(b2));
        out.classes.emplace_back(i, std::vector<int>{at, at + 1});
    }
    return out;
}

ResolvedBlockDesign round_robin(int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("round robin needs an even team count");
    ResolvedBlockDesign out;
    out.block_size = 2;
    out.design.lambda = 1;
    out.holes = {{}};
    int m = n - 1;
    for (int i = 0; i < m; ++i) out.design.points.push_back(std::to_string(i));
    out.design.points.push_back("inf");
    for (int round = 0; round < m; ++round) {
        std::vector<int> members;
        std::vector<int> fixed = {round, m};
        members.push_back(static_cast<int>(out.design.blocks.size()));
        out.design.blocks.push_back(std::move(fixed));
        for (int j = 1; j <= (n - 2) / 2; ++j) {
            std::vector<int> game = {((round + j) % m), ((round - j) % m + m) % m};
            std::sort(game.begin(), game.end());
            members.push_back(static_cast<int>(out.design.blocks.size()));
            out.design.blocks.push_back(std::move(game));
        }
        out.classes.emplace_back(kFullClass, std::move(members));
    }
    return out;
}

}  // namespace framekit::designs
