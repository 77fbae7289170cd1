// Copyright 2026 The msqsp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "msqsp/trig_series.hpp"

namespace msqsp {

template class TrigSeries<double>;
template class LaurentPoly<double>;

template double eval(const TrigSeries<double>&, double);
template double eval_derivative(const TrigSeries<double>&, double);
template LaurentPoly<double> to_laurent(const TrigSeries<double>&);
template TrigSeries<double> from_laurent(const LaurentPoly<double>&, Parity,
                                         double);

}  // namespace msqsp
