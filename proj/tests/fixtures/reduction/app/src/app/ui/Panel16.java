// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0
// Generated by gen_reduction.py; do not edit.
package app.ui;

import app.consts.*;

public class Panel16 {
  private final Widget widget;

  public Panel16(Widget widget) {
    this.widget = widget;
  }

  public void configure() {
    widget.switchMode(Modes.WREN_MODE);
    widget.setMargin(Margins.LAGOON_MARGIN);
  }
}
