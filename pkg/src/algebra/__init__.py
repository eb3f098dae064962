"""
有限逆半群、同余、特征谱与泛群胚的计算核心
"""
