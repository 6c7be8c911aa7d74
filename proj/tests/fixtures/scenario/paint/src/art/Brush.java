// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

package art;

public class Brush {
  private Color current;

  public void apply(Color color) {
    current = color;
  }

  public Color current() {
    return current;
  }
}
