"""实情形：精确表示、标准形、必要条件、结构与设计提取、穷举搜索、等价判定。"""
