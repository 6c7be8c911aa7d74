// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

package art;

public class Studio6 extends Palette {
  public void paint(Brush brush) {
    brush.apply(makeBlue());
    brush.apply(makeAmber());
    brush.apply(makeBlue());
  }
}
