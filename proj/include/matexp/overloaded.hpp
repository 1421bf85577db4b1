#pragma once

namespace matexp {

/// Visitor built from lambdas, for std::visit over the spectrum variants.
template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace matexp
