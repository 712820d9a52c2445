#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace aquadet {

/// Ordered class names; ids are positions. Default is the two-class river map.
class ClassMap {
public:
    ClassMap() : names_{"crayfish", "plastic"} {}
    explicit ClassMap(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    bool contains(int id) const { return id >= 0 && id < size(); }
    const std::string& name(int id) const { return names_.at(id); }
    const std::vector<std::string>& names() const { return names_; }

private:
    std::vector<std::string> names_;
};

/// Axis-aligned box in fractions of the image: center (cx, cy), size (w, h).
struct NormalizedBox {
    int class_id = 0;
    double cx = 0, cy = 0, w = 0, h = 0;

    double left() const { return cx - w / 2; }
    double right() const { return cx + w / 2; }
    double top() const { return cy - h / 2; }
    double bottom() const { return cy + h / 2; }
    double area() const { return w * h; }

    /// Clips edges to [0,1] and re-derives center/size. Degenerate results keep w,h > 0
    /// responsibility with the caller (augmentation drops such boxes before clipping).
    NormalizedBox clipped_to_unit() const;

    bool satisfies_invariants() const;

    bool operator==(const NormalizedBox& o) const {
        return class_id == o.class_id && cx == o.cx && cy == o.cy && w == o.w && h == o.h;
    }
};

struct LabeledImage {
    std::filesystem::path image_path;
    std::vector<NormalizedBox> boxes;  // empty = negative image
};

enum class Split { train, test, valid };
const char* split_name(Split s);

/// Plain-text manifest: `[classes]`, `[train]`, `[test]`, `[valid]` sections,
/// each listing one entry per line (class names / relative image paths).
struct DatasetManifest {
    std::filesystem::path root;
    ClassMap classes;
    std::vector<std::string> train;
    std::vector<std::string> test;
    std::vector<std::string> valid;

    const std::vector<std::string>& split(Split s) const;
};

DatasetManifest read_manifest(const std::filesystem::path& manifest_path);
void write_manifest(const DatasetManifest& m, const std::filesystem::path& manifest_path);

/// One whitespace-separated "class cx cy w h" line -> NormalizedBox.
/// Coordinate dust up to 1e-6 outside [0,1] is clamped; beyond that is OutOfRangeError.
/// Throws MalformedLineError / UnknownClassError as appropriate.
NormalizedBox parse_label_line(const std::string& line, const ClassMap& classes);

std::string format_label_line(const NormalizedBox& box);

/// Label file convention: `<image-stem>.txt` beside the image.
std::filesystem::path label_path_for(const std::filesystem::path& image_path);

std::vector<NormalizedBox> read_label_file(const std::filesystem::path& path,
                                           const ClassMap& classes);
void write_label_file(const std::vector<NormalizedBox>& boxes,
                      const std::filesystem::path& path);

struct LoadedSplit {
    Split split;
    std::vector<LabeledImage> images;
};

struct LoadedDataset {
    ClassMap classes;
    std::vector<LoadedSplit> splits;  // train, test, valid order

    const LoadedSplit& split(Split s) const;
    size_t total_images() const;
    size_t total_boxes() const;
};

/// Pairs every manifest image with its parsed label file. A missing label file
/// is MissingLabelFileError; parse failures carry file and line context.
LoadedDataset load_dataset(const DatasetManifest& manifest);

struct SplitExpectation {
    long train = -1;
    long test = -1;
    long valid = -1;  // -1 = don't check
};

struct SplitCheck {
    std::string split;
    long expected = 0;
    long actual = 0;
    bool pass = false;
};

struct ValidationReport {
    std::vector<SplitCheck> splits;
    bool pass = false;

    std::string to_json() const;
};

/// Counts images that actually exist on disk per split and compares with the
/// expectation. Never throws for count mismatches; the report carries them.
ValidationReport validate_split(const DatasetManifest& manifest, const SplitExpectation& expected);

}  // namespace aquadet
