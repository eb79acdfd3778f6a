#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rcnn/error.hpp"

namespace rcnn {

/// Dense row-major 2D array. Rows index the image height, columns the width.
template <typename T>
class Grid {
public:
    Grid() = default;
    Grid(int width, int height, T fill = T{})
        : width_(width), height_(height),
          data_(static_cast<size_t>(width) * static_cast<size_t>(height), fill) {
        if (width < 1 || height < 1)
            throw InvalidParameter("grid dimensions must be positive");
    }

    int width() const { return width_; }
    int height() const { return height_; }
    size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    T& operator()(int row, int col) { return data_[static_cast<size_t>(row) * width_ + col]; }
    const T& operator()(int row, int col) const {
        return data_[static_cast<size_t>(row) * width_ + col];
    }
    T& operator[](size_t i) { return data_[i]; }
    const T& operator[](size_t i) const { return data_[i]; }

    T* data() { return data_.data(); }
    const T* data() const { return data_.data(); }
    auto begin() { return data_.begin(); }
    auto end() { return data_.end(); }
    auto begin() const { return data_.begin(); }
    auto end() const { return data_.end(); }

    bool same_shape(int w, int h) const { return width_ == w && height_ == h; }
    template <typename U>
    bool same_shape(const Grid<U>& other) const {
        return same_shape(other.width(), other.height());
    }

    friend bool operator==(const Grid& a, const Grid& b) {
        return a.width_ == b.width_ && a.height_ == b.height_ && a.data_ == b.data_;
    }

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<T> data_;
};

template <typename T, typename U>
void require_same_shape(const Grid<T>& a, const Grid<U>& b, const char* what) {
    if (!a.same_shape(b))
        throw DimensionError(what);
}

}  // namespace rcnn
