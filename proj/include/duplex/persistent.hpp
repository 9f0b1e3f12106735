#pragma once

#include <cstddef>
#include <iterator>
#include <memory>
#include <utility>

namespace duplex::detail {

// Immutable singly linked list with structural sharing. Taking a copy is a
// snapshot; push/pop never disturb other holders. Long chains are released
// iteratively so a 10k-deep stack does not recurse in the destructor.
template <class T>
class Chain {
  struct Cell {
    T head;
    std::shared_ptr<Cell> tail;
    std::size_t size;

    Cell(T h, std::shared_ptr<Cell> t)
        : head(std::move(h)), tail(std::move(t)), size(1 + (tail ? tail->size : 0)) {}

    ~Cell() {
      auto next = std::move(tail);
      while (next && next.use_count() == 1) {
        auto after = std::move(next->tail);
        next = std::move(after);
      }
    }
  };

 public:
  Chain() = default;

  bool empty() const noexcept { return !cell_; }
  std::size_t size() const noexcept { return cell_ ? cell_->size : 0; }

  // Precondition: !empty().
  const T& top() const noexcept { return cell_->head; }
  Chain pop() const noexcept { return Chain(cell_->tail); }

  Chain push(T v) const { return Chain(std::make_shared<Cell>(std::move(v), cell_)); }

  // Identity of the underlying cell; two chains sharing a cell share the
  // whole suffix.
  const void* identity() const noexcept { return cell_.get(); }

  class iterator {
   public:
    using value_type = T;
    using difference_type = std::ptrdiff_t;
    using reference = const T&;
    using pointer = const T*;
    using iterator_category = std::forward_iterator_tag;

    iterator() = default;
    explicit iterator(const Cell* c) : cell_(c) {}
    reference operator*() const { return cell_->head; }
    pointer operator->() const { return &cell_->head; }
    iterator& operator++() {
      cell_ = cell_->tail.get();
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator& o) const = default;

   private:
    const Cell* cell_ = nullptr;
  };

  iterator begin() const { return iterator(cell_.get()); }
  iterator end() const { return iterator(); }

 private:
  explicit Chain(std::shared_ptr<Cell> c) : cell_(std::move(c)) {}

  std::shared_ptr<Cell> cell_;
};

}  // namespace duplex::detail
